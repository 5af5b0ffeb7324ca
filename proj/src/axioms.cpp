#include "gmetric/axioms.hpp"

#include <cmath>
#include <stdexcept>

namespace gmetric {

namespace {

struct AxiomNames {
    const char* lbnd;
    const char* sym;
    const char* sep;
    const char* inq;
};

AxiomNames names_for(Family f) {
    switch (f) {
    case Family::Metric: return {"(m-lbnd)", "(m-sym)", "(m-sep)", "(m-inq)"};
    case Family::PartialMetric: return {"(p-lbnd)", "(p-sym)", "(p-sep)", "(p-inq)"};
    case Family::StrongPartialMetric:
        return {"(s-lbnd)", "(s-sym)", "(s-sep)", "(s-inq)"};
    case Family::NMetric: return {"(n-lbnd)", "(n-sym)", "(n-sep)", "(n-inq)"};
    case Family::PartialNMetric:
        return {"(P_n-lbnd)", "(P_n-sym)", "(P_n-sep)", "(P_n-inq)"};
    case Family::StrongPartialNMetric:
        return {"(S_n-lbnd)", "(S_n-sym)", "(S_n-sep)", "(S_n-inq)"};
    }
    return {"", "", "", ""};
}

class Checker {
public:
    Checker(const FiniteSpace& s, Tolerance tol) : s_(s), tol_(tol) {}

    AxiomEntry lower_bound() {
        const Family f = s_.kind().family;
        AxiomEntry e;
        e.id = names_for(f).lbnd;
        const int m = s_.size();
        for (int x = 0; x < m && e.holds; ++x) {
            for (int y = 0; y < m; ++y) {
                const double v = s_.value_pow(x, y);
                if (is_partial(f)) {
                    const double sv = s_.self(x);
                    if (is_strong(f)) {
                        // strict for x != y
                        if (x != y && !tol_.lt(sv, v)) {
                            fail(e, {x, y}, sv - v);
                            break;
                        }
                    } else if (!tol_.leq(sv, v)) {
                        fail(e, {x, y}, sv - v);
                        break;
                    }
                } else if (!tol_.leq(0.0, v)) {
                    fail(e, {x, y}, -v);
                    break;
                }
            }
        }
        return e;
    }

    AxiomEntry separation() {
        const Family f = s_.kind().family;
        AxiomEntry e;
        e.id = names_for(f).sep;
        e.derived = is_strong(f); // hidden inside the strict lower bound
        const int m = s_.size();
        for (int x = 0; x < m && e.holds; ++x) {
            for (int y = 0; y < m; ++y) {
                const double v = s_.value_pow(x, y);
                if (!is_partial(f)) {
                    // value zero iff the two points coincide
                    if (x == y ? !tol_.eq(v, 0.0) : tol_.eq(v, 0.0)) {
                        fail(e, {x, y}, std::abs(v));
                        break;
                    }
                } else if (is_strong(f)) {
                    // v <= self(x) iff x == y
                    const bool collapsed = tol_.leq(v, s_.self(x));
                    if (collapsed != (x == y)) {
                        fail(e, {x, y}, std::abs(v - s_.self(x)));
                        break;
                    }
                } else {
                    // both displayed equalities hold iff x == y
                    const bool both = tol_.eq(v, s_.self(x)) &&
                                      tol_.eq(s_.value_pow(y, x), s_.self(y));
                    if (both != (x == y)) {
                        fail(e, {x, y}, std::abs(v - s_.self(x)));
                        break;
                    }
                }
            }
        }
        return e;
    }

    AxiomEntry triangular() {
        const Family f = s_.kind().family;
        AxiomEntry e;
        e.id = names_for(f).inq;
        const int n = s_.arity();
        const int m = s_.size();
        MultisetIndex base(m, n - 1);
        std::vector<int> lhs(n), first(n), second(n);
        for (std::size_t r = 0; r < base.count() && e.holds; ++r) {
            const auto q = base.unrank(r);
            for (int xn = 0; xn < m && e.holds; ++xn) {
                std::copy(q.begin(), q.end(), lhs.begin());
                lhs[n - 1] = xn;
                const double left = s_.value(lhs);
                for (int mid = 0; mid < m; ++mid) {
                    std::copy(q.begin(), q.end(), first.begin());
                    first[n - 1] = mid;
                    double right = s_.value(first) + s_.value_pow(mid, xn);
                    if (is_partial(f))
                        right -= s_.self(mid);
                    if (!tol_.leq(left, right)) {
                        fail(e, lhs, left - right, mid);
                        break;
                    }
                }
            }
        }
        return e;
    }

private:
    void fail(AxiomEntry& e, const std::vector<int>& tuple, double margin,
              int pivot = -1) {
        e.holds = false;
        AxiomWitness w;
        for (int i : tuple)
            w.tuple.push_back(s_.label(i));
        if (pivot >= 0)
            w.pivot = s_.label(pivot);
        w.margin = margin;
        e.witness = std::move(w);
    }

    const FiniteSpace& s_;
    Tolerance tol_;
};

} // namespace

const AxiomEntry* AxiomReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id)
            return &e;
    return nullptr;
}

std::vector<std::string> axiom_ids(Family f) {
    const auto n = names_for(f);
    return {n.lbnd, n.sym, n.sep, n.inq};
}

AxiomReport check_axioms(const FiniteSpace& space, Tolerance tol) {
    for (double v : space.raw_values())
        if (!std::isfinite(v))
            throw std::invalid_argument("check_axioms: non-finite value in table");

    Checker c(space, tol);
    const Family f = space.kind().family;

    AxiomReport report;
    report.entries.push_back(c.lower_bound());
    AxiomEntry sym;
    sym.id = names_for(f).sym;
    sym.representational = true; // sorted-tuple storage
    report.entries.push_back(sym);
    report.entries.push_back(c.separation());
    report.entries.push_back(c.triangular());

    report.overall = true;
    for (const auto& e : report.entries)
        report.overall = report.overall && e.holds;
    return report;
}

} // namespace gmetric
