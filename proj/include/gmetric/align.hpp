#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmetric/space.hpp"

namespace gmetric {

inline constexpr char kGap = '-';

// Letter-comparison costs: alpha for a Match, beta for a Mismatch, gamma for
// an InDel, 0 for a Relay. alpha and beta may instead be per-letter-pair
// tables (keys normalized to sorted two-letter strings).
struct ScoringScheme {
    std::string alphabet; // gap excluded
    double alpha = -1.0;
    double beta = 1.0;
    double gamma = 2.0;
    std::optional<std::map<std::string, double>> alpha_table;
    std::optional<std::map<std::string, double>> beta_table;

    double match_cost(char a) const;
    double mismatch_cost(char a, char b) const;
    double max_alpha() const;
    double max_beta() const;
    bool has_letter(char c) const;
    void require_word(const std::string& w) const;
};

struct SchemeVerdict {
    bool valid = true;
    std::vector<std::string> violations; // named violated conditions
};

// Valid iff max{alpha} < min{beta, gamma, 0}, max{beta} <= 2*gamma, gamma > 0,
// and (with tables) the distinct-letter triangle instances
// beta(x,y) <= beta(x,z) + beta(y,z) - alpha(z) all hold.
SchemeVerdict validate_scheme(const ScoringScheme& scheme);

struct AlignmentResult {
    double score = 0.0;
    std::string aligned_x;
    std::string aligned_y;
    std::vector<double> column_scores;
};

// Minimum total column score over all gap alignments (dynamic program).
double score_pair(const std::string& x, const std::string& y,
                  const ScoringScheme& scheme);

// One optimal alignment; traceback ties prefer Match/Mismatch, then
// Deletion (gap in y), then Insertion.
AlignmentResult best_alignment(const std::string& x, const std::string& y,
                               const ScoringScheme& scheme);

// Column scores of a given padded alignment (both rows the same length,
// letters or gaps). Relay columns score 0.
std::vector<double> alignment_columns(const std::string& ax, const std::string& ay,
                                      const ScoringScheme& scheme);

// Sum of score_pair over all unordered index pairs of the word list
// (repeated words pair with themselves).
double multi_score(const std::vector<std::string>& words,
                   const ScoringScheme& scheme);

// Strong partial metric (n = 2) or strong partial n-Metric (n > 2) on a set
// of distinct words, with the pairwise scores (resp. their pair sums) as the
// table. Requires a valid scheme.
FiniteSpace space_from_words(const std::vector<std::string>& words,
                             const ScoringScheme& scheme, int n);

// Scheme file format: {"alphabet": "ACGT", "alpha": -1, "beta": 1,
// "gamma": 2, "alpha_table": {...}, "beta_table": {...}} (tables optional).
ScoringScheme scheme_from_json(const nlohmann::json& doc);
nlohmann::json scheme_to_json(const ScoringScheme& scheme);
ScoringScheme load_scheme(const std::string& path);

} // namespace gmetric
