#include "gmetric/align.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

namespace gmetric {

namespace {

std::string pair_key(char a, char b) {
    if (a > b)
        std::swap(a, b);
    return std::string{a, b};
}

} // namespace

double ScoringScheme::match_cost(char a) const {
    if (alpha_table) {
        auto it = alpha_table->find(pair_key(a, a));
        if (it == alpha_table->end())
            throw std::invalid_argument(std::string("alpha_table misses letter '") +
                                        a + "'");
        return it->second;
    }
    return alpha;
}

double ScoringScheme::mismatch_cost(char a, char b) const {
    if (beta_table) {
        auto it = beta_table->find(pair_key(a, b));
        if (it == beta_table->end())
            throw std::invalid_argument(std::string("beta_table misses pair '") +
                                        pair_key(a, b) + "'");
        return it->second;
    }
    return beta;
}

double ScoringScheme::max_alpha() const {
    if (!alpha_table)
        return alpha;
    double mx = -std::numeric_limits<double>::infinity();
    for (char c : alphabet)
        mx = std::max(mx, match_cost(c));
    return mx;
}

double ScoringScheme::max_beta() const {
    if (!beta_table)
        return beta;
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet.size(); ++j)
            mx = std::max(mx, mismatch_cost(alphabet[i], alphabet[j]));
    return mx;
}

bool ScoringScheme::has_letter(char c) const {
    return alphabet.find(c) != std::string::npos;
}

void ScoringScheme::require_word(const std::string& w) const {
    for (char c : w)
        if (!has_letter(c))
            throw std::invalid_argument(std::string("letter '") + c +
                                        "' outside the alphabet");
}

SchemeVerdict validate_scheme(const ScoringScheme& scheme) {
    SchemeVerdict v;
    if (scheme.alphabet.empty())
        v.violations.push_back("alphabet empty");
    if (scheme.has_letter(kGap))
        v.violations.push_back("gap symbol inside alphabet");
    std::set<char> uniq(scheme.alphabet.begin(), scheme.alphabet.end());
    if (uniq.size() != scheme.alphabet.size())
        v.violations.push_back("alphabet has repeated letters");
    if (!v.violations.empty()) {
        v.valid = false;
        return v;
    }

    const double a = scheme.max_alpha();
    const double b = scheme.max_beta();
    double min_beta = scheme.beta;
    if (scheme.beta_table) {
        min_beta = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < scheme.alphabet.size(); ++i)
            for (std::size_t j = i + 1; j < scheme.alphabet.size(); ++j)
                min_beta = std::min(min_beta,
                                    scheme.mismatch_cost(scheme.alphabet[i],
                                                         scheme.alphabet[j]));
    }

    if (!(scheme.gamma > 0))
        v.violations.push_back("gamma > 0");
    if (!(a < std::min({min_beta, scheme.gamma, 0.0})))
        v.violations.push_back("alpha < min{beta, gamma, 0}");
    if (!(b <= 2 * scheme.gamma))
        v.violations.push_back("beta <= 2*gamma");

    // With tables the Match/Mismatch triangle instances are not implied by
    // the aggregate bounds; check them over all distinct letter triples.
    if (scheme.alpha_table || scheme.beta_table) {
        bool ok = true;
        for (char x : scheme.alphabet)
            for (char y : scheme.alphabet)
                for (char z : scheme.alphabet) {
                    if (x == y || y == z || x == z)
                        continue;
                    if (scheme.mismatch_cost(x, y) > scheme.mismatch_cost(x, z) +
                                                         scheme.mismatch_cost(y, z) -
                                                         scheme.match_cost(z))
                        ok = false;
                }
        if (!ok)
            v.violations.push_back("beta(x,y) <= beta(x,z) + beta(y,z) - alpha(z)");
    }

    v.valid = v.violations.empty();
    return v;
}

namespace {

// cell(i,j) = best score aligning x[0..i) with y[0..j). Relay columns are
// excluded: they contribute 0 and never shorten any other column.
std::vector<std::vector<double>> dp_table(const std::string& x, const std::string& y,
                                          const ScoringScheme& s) {
    const std::size_t nx = x.size(), ny = y.size();
    std::vector<std::vector<double>> cell(nx + 1, std::vector<double>(ny + 1));
    for (std::size_t i = 0; i <= nx; ++i)
        cell[i][0] = i * s.gamma;
    for (std::size_t j = 0; j <= ny; ++j)
        cell[0][j] = j * s.gamma;
    for (std::size_t i = 1; i <= nx; ++i)
        for (std::size_t j = 1; j <= ny; ++j) {
            const double diag =
                cell[i - 1][j - 1] + (x[i - 1] == y[j - 1]
                                          ? s.match_cost(x[i - 1])
                                          : s.mismatch_cost(x[i - 1], y[j - 1]));
            const double del = cell[i - 1][j] + s.gamma;
            const double ins = cell[i][j - 1] + s.gamma;
            cell[i][j] = std::min({diag, del, ins});
        }
    return cell;
}

} // namespace

double score_pair(const std::string& x, const std::string& y,
                  const ScoringScheme& scheme) {
    scheme.require_word(x);
    scheme.require_word(y);
    return dp_table(x, y, scheme)[x.size()][y.size()];
}

AlignmentResult best_alignment(const std::string& x, const std::string& y,
                               const ScoringScheme& scheme) {
    scheme.require_word(x);
    scheme.require_word(y);
    const auto cell = dp_table(x, y, scheme);

    AlignmentResult res;
    res.score = cell[x.size()][y.size()];

    std::size_t i = x.size(), j = y.size();
    std::string ax, ay;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0) {
            const double diag =
                cell[i - 1][j - 1] + (x[i - 1] == y[j - 1]
                                          ? scheme.match_cost(x[i - 1])
                                          : scheme.mismatch_cost(x[i - 1], y[j - 1]));
            if (cell[i][j] == diag) {
                ax += x[--i];
                ay += y[--j];
                continue;
            }
        }
        if (i > 0 && cell[i][j] == cell[i - 1][j] + scheme.gamma) {
            ax += x[--i];
            ay += kGap;
            continue;
        }
        ax += kGap;
        ay += y[--j];
    }
    std::reverse(ax.begin(), ax.end());
    std::reverse(ay.begin(), ay.end());
    res.aligned_x = std::move(ax);
    res.aligned_y = std::move(ay);
    res.column_scores = alignment_columns(res.aligned_x, res.aligned_y, scheme);
    return res;
}

std::vector<double> alignment_columns(const std::string& ax, const std::string& ay,
                                      const ScoringScheme& scheme) {
    if (ax.size() != ay.size())
        throw std::invalid_argument("alignment rows differ in length");
    std::vector<double> cols;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        const char a = ax[i], b = ay[i];
        if (a == kGap && b == kGap)
            cols.push_back(0.0); // Relay
        else if (a == kGap || b == kGap)
            cols.push_back(scheme.gamma);
        else if (a == b)
            cols.push_back(scheme.match_cost(a));
        else
            cols.push_back(scheme.mismatch_cost(a, b));
    }
    return cols;
}

double multi_score(const std::vector<std::string>& words,
                   const ScoringScheme& scheme) {
    if (words.size() < 2)
        throw std::invalid_argument("multi_score: need at least two words");
    double sum = 0.0;
    for (std::size_t j = 1; j < words.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            sum += score_pair(words[i], words[j], scheme);
    return sum;
}

FiniteSpace space_from_words(const std::vector<std::string>& words,
                             const ScoringScheme& scheme, int n) {
    std::set<std::string> uniq(words.begin(), words.end());
    if (uniq.size() != words.size())
        throw std::invalid_argument("space_from_words: duplicate words");
    if (words.empty())
        throw std::invalid_argument("space_from_words: no words");
    if (n < 2)
        throw std::invalid_argument("space_from_words: n must be >= 2");
    const auto verdict = validate_scheme(scheme);
    if (!verdict.valid)
        throw std::invalid_argument("space_from_words: scheme fails validation (" +
                                    verdict.violations.front() + ")");

    // Pairwise scores once; tuple values are their sums over position pairs.
    const int m = static_cast<int>(words.size());
    std::vector<std::vector<double>> pair(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            pair[i][j] = pair[j][i] = score_pair(words[i], words[j], scheme);

    MetricKind kind = n == 2 ? MetricKind(Family::StrongPartialMetric, 2)
                             : MetricKind(Family::StrongPartialNMetric, n);
    return FiniteSpace::from_function(
        std::vector<std::string>(words.begin(), words.end()), kind,
        [&](std::span<const int> t) {
            if (t.size() == 2)
                return pair[t[0]][t[1]];
            double sum = 0.0;
            for (std::size_t j = 1; j < t.size(); ++j)
                for (std::size_t i = 0; i < j; ++i)
                    sum += pair[t[i]][t[j]];
            return sum;
        });
}

ScoringScheme scheme_from_json(const nlohmann::json& doc) {
    ScoringScheme s;
    s.alphabet = doc.at("alphabet").get<std::string>();
    if (doc.contains("alpha"))
        s.alpha = doc.at("alpha").get<double>();
    if (doc.contains("beta"))
        s.beta = doc.at("beta").get<double>();
    s.gamma = doc.at("gamma").get<double>();
    auto read_table = [](const nlohmann::json& t) {
        std::map<std::string, double> out;
        for (auto it = t.begin(); it != t.end(); ++it) {
            if (it.key().size() != 2)
                throw std::invalid_argument("table keys must be two-letter strings");
            out[pair_key(it.key()[0], it.key()[1])] = it.value().get<double>();
        }
        return out;
    };
    if (doc.contains("alpha_table"))
        s.alpha_table = read_table(doc.at("alpha_table"));
    if (doc.contains("beta_table"))
        s.beta_table = read_table(doc.at("beta_table"));
    return s;
}

nlohmann::json scheme_to_json(const ScoringScheme& s) {
    nlohmann::json doc{{"alphabet", s.alphabet},
                       {"alpha", s.alpha},
                       {"beta", s.beta},
                       {"gamma", s.gamma}};
    if (s.alpha_table)
        doc["alpha_table"] = *s.alpha_table;
    if (s.beta_table)
        doc["beta_table"] = *s.beta_table;
    return doc;
}

ScoringScheme load_scheme(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open scheme file: " + path);
    return scheme_from_json(nlohmann::json::parse(in));
}

} // namespace gmetric
