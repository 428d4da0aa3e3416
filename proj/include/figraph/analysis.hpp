#pragma once

// Exact analysis of integer sequences: quasi-polynomial fits, linear
// recurrences (rational generating functions), trend checks against the
// classification graph, and closed forms for unions of Kneser graphs.
//
// All arithmetic is exact rational; acceptance is integer equality.

#include "figraph/error.hpp"
#include "figraph/model.hpp"
#include "figraph/poly.hpp"
#include "figraph/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace figraph {

struct SequencePoint {
    std::int64_t n;
    std::int64_t value;
    friend bool operator==(const SequencePoint&, const SequencePoint&) = default;
};

/// Points of a scan. Throws InsufficientData if any row is incomplete.
inline std::vector<SequencePoint> points_of(const AlphaSequence& seq) {
    std::vector<SequencePoint> out;
    for (const AlphaRow& r : seq.rows) {
        if (!r.complete())
            throw InsufficientData("row n=" + std::to_string(r.n) +
                                   " is incomplete (search budget exceeded)");
        out.push_back({r.n, r.alpha});
    }
    return out;
}

/// Builds points a(first), a(first+1), ... from a value list.
inline std::vector<SequencePoint> points_from(std::int64_t first,
                                              std::span<const std::int64_t> values) {
    std::vector<SequencePoint> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out.push_back({first + static_cast<std::int64_t>(i), values[i]});
    return out;
}

namespace detail {

inline void require_contiguous(std::span<const SequencePoint> points) {
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].n != points[i - 1].n + 1)
            throw InsufficientData("sequence must cover a contiguous range of n");
}

inline std::int64_t residue(std::int64_t n, int period) {
    const std::int64_t r = n % period;
    return r < 0 ? r + period : r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Quasi-polynomial fitting

struct QuasiPolynomialFit {
    int period = 1;
    int degree = 0;                  ///< largest piece degree (0 for constant pieces)
    std::vector<Polynomial> pieces;  ///< pieces[i] applies to n with n mod period == i
    std::int64_t stable_degree = 0;  ///< smallest n0 with every point n >= n0 matching
    int points_confirmed_per_class = 0; ///< fewest confirmation points in any class
    int total_confirmed = 0;            ///< confirmation points over all classes

    Rational operator()(std::int64_t n) const {
        return pieces.at(static_cast<std::size_t>(detail::residue(n, period)))(n);
    }
};

/// Smallest (period, degree) quasi-polynomial that reproduces the tail of the
/// sequence, trying periods 1..max_period and, within a period, degrees
/// 0..max_degree. Each residue class is interpolated through its latest
/// degree+1 points; the stable degree is then found by walking back to the
/// last mismatch. Points at or beyond the stable degree that were not used for
/// interpolation are confirmations: every class needs at least one, and the
/// classes together need at least degree+2. For period 1 this is the usual
/// "degree+2 points beyond the interpolation nodes".
///
/// Returns nullopt (NoFit) if no feasible candidate confirms. Throws
/// InsufficientData if the range is not contiguous or too short for every
/// candidate.
inline std::optional<QuasiPolynomialFit>
fit_quasi_polynomial(std::span<const SequencePoint> points, int max_period = 4,
                     int max_degree = 3) {
    if (max_period < 1 || max_degree < 0)
        throw std::invalid_argument("fit: need max_period >= 1 and max_degree >= 0");
    detail::require_contiguous(points);

    bool any_feasible = false;
    for (int period = 1; period <= max_period; ++period) {
        std::vector<std::vector<SequencePoint>> classes(static_cast<std::size_t>(period));
        for (const auto& p : points)
            classes[static_cast<std::size_t>(detail::residue(p.n, period))].push_back(p);

        for (int degree = 0; degree <= max_degree; ++degree) {
            const std::size_t nodes_per_class = static_cast<std::size_t>(degree) + 1;
            const std::size_t need_total =
                static_cast<std::size_t>(period) * nodes_per_class + nodes_per_class + 1;
            if (points.size() < need_total ||
                std::any_of(classes.begin(), classes.end(),
                            [&](const auto& cls) { return cls.size() < nodes_per_class + 1; }))
                continue;
            any_feasible = true;

            QuasiPolynomialFit fit;
            fit.period = period;
            fit.stable_degree = points.front().n;
            for (const auto& cls : classes) {
                std::vector<std::pair<Rational, Rational>> nodes;
                for (std::size_t i = cls.size() - nodes_per_class; i < cls.size(); ++i)
                    nodes.emplace_back(Rational(cls[i].n), Rational(cls[i].value));
                fit.pieces.push_back(Polynomial::interpolate(nodes));
            }
            for (auto it = points.rbegin(); it != points.rend(); ++it) {
                if (fit(it->n) != Rational(it->value)) {
                    fit.stable_degree = it->n + 1;
                    break;
                }
            }
            int confirmed = -1;
            int total = 0;
            for (const auto& cls : classes) {
                const auto tail = std::count_if(cls.begin(), cls.end(), [&](const auto& p) {
                    return p.n >= fit.stable_degree;
                });
                const int extra = static_cast<int>(tail) - degree - 1;
                confirmed = confirmed < 0 ? extra : std::min(confirmed, extra);
                total += std::max(extra, 0);
            }
            if (confirmed < 1 || total < degree + 2)
                continue;
            fit.total_confirmed = total;
            fit.points_confirmed_per_class = confirmed;
            for (const auto& piece : fit.pieces)
                fit.degree = std::max(fit.degree, piece.degree());
            return fit;
        }
    }
    if (!any_feasible)
        throw InsufficientData("too few points for any period <= " + std::to_string(max_period) +
                               " and degree <= " + std::to_string(max_degree));
    return std::nullopt;
}

inline std::optional<QuasiPolynomialFit>
fit_quasi_polynomial(const AlphaSequence& seq, int max_period = 4, int max_degree = 3) {
    const auto points = points_of(seq);
    return fit_quasi_polynomial(std::span<const SequencePoint>(points), max_period, max_degree);
}

inline std::string to_text(const QuasiPolynomialFit& fit) {
    std::ostringstream out;
    out << "period " << fit.period << ", degree " << fit.degree << ", stable degree "
        << fit.stable_degree << "\n";
    for (std::size_t i = 0; i < fit.pieces.size(); ++i) {
        out << "  piece";
        if (fit.period > 1)
            out << " n = " << i << " mod " << fit.period;
        out << ": " << fit.pieces[i].to_string() << "\n";
    }
    out << "  confirmed on " << fit.total_confirmed << " points (>= "
        << fit.points_confirmed_per_class << " per residue class)\n";
    return out.str();
}

inline nlohmann::ordered_json to_json(const QuasiPolynomialFit& fit) {
    nlohmann::ordered_json doc;
    doc["period"] = fit.period;
    doc["degree"] = fit.degree;
    doc["stable_degree"] = fit.stable_degree;
    doc["points_confirmed_per_class"] = fit.points_confirmed_per_class;
    doc["total_confirmed"] = fit.total_confirmed;
    doc["pieces"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < fit.pieces.size(); ++i) {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const auto& c : fit.pieces[i].coefficients())
            coeffs.push_back(c.str());
        doc["pieces"].push_back(
            {{"residue", i}, {"polynomial", fit.pieces[i].to_string()}, {"coefficients", coeffs}});
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Linear recurrences

/// a(n) = c_1 a(n-1) + ... + c_L a(n-L) for every n >= cutoff + L.
struct RecurrenceGuess {
    int order = 0;
    std::vector<Rational> coefficients; ///< c_1 .. c_L
    std::int64_t cutoff = 0;            ///< first n of the window the recurrence covers

    /// Denominator of the generating function: 1 - c_1 t - ... - c_L t^L.
    Polynomial denominator() const {
        std::vector<Rational> q{Rational(1)};
        for (const auto& c : coefficients)
            q.push_back(-c);
        return Polynomial(std::move(q));
    }

    /// x^L - c_1 x^(L-1) - ... - c_L, lowest degree first.
    Polynomial characteristic() const {
        std::vector<Rational> q(coefficients.size() + 1);
        q.back() = 1;
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            q[coefficients.size() - 1 - i] = -coefficients[i];
        return Polynomial(std::move(q));
    }
};

namespace detail {

/// Solves the (possibly overdetermined) system A c = b exactly. Returns
/// nullopt if inconsistent; free variables are set to zero.
inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows,
                                                        std::size_t unknowns) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = Rational(1) / rows[rank][col];
        for (auto& x : rows[rank])
            x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            const Rational f = rows[r][col];
            for (std::size_t k = col; k <= unknowns; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][unknowns] != 0)
            return std::nullopt;
    std::vector<Rational> solution(unknowns, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        solution[pivot_col[r]] = rows[r][unknowns];
    return solution;
}

} // namespace detail

/// Minimal-order linear recurrence with rational coefficients that holds on a
/// tail of the sequence. For each order L = 0, 1, ... and each cutoff from the
/// start onward, solves the Hankel system of all equations in the window
/// exactly; a window must contain at least 2L+1 points. Returns the lowest
/// order, then the earliest cutoff. max_order < 0 means (size - 1) / 2.
inline std::optional<RecurrenceGuess> detect_recurrence(std::span<const SequencePoint> points,
                                                        int max_order = -1) {
    detail::require_contiguous(points);
    const std::size_t size = points.size();
    if (size == 0)
        throw InsufficientData("empty sequence");
    const int limit = max_order < 0 ? static_cast<int>((size - 1) / 2) : max_order;
    for (int order = 0; order <= limit; ++order) {
        const auto L = static_cast<std::size_t>(order);
        for (std::size_t start = 0; start + 2 * L + 1 <= size; ++start) {
            std::vector<std::vector<Rational>> rows;
            for (std::size_t t = start + L; t < size; ++t) {
                std::vector<Rational> row;
                for (std::size_t i = 1; i <= L; ++i)
                    row.emplace_back(points[t - i].value);
                row.emplace_back(points[t].value);
                rows.push_back(std::move(row));
            }
            if (auto c = detail::solve_exact(std::move(rows), L)) {
                RecurrenceGuess guess;
                guess.order = order;
                guess.coefficients = std::move(*c);
                guess.cutoff = points[start].n;
                return guess;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<RecurrenceGuess> detect_recurrence(const AlphaSequence& seq,
                                                        int max_order = -1) {
    const auto points = points_of(seq);
    return detect_recurrence(std::span<const SequencePoint>(points), max_order);
}

inline std::string to_text(const RecurrenceGuess& r) {
    std::ostringstream out;
    out << "order " << r.order << " from n = " << r.cutoff << ": a(n) =";
    if (r.order == 0)
        out << " 0";
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
        out << (i ? " + " : " ") << "(" << r.coefficients[i].str() << ")*a(n-" << i + 1 << ")";
    out << "\n  generating function denominator: " << r.denominator().to_string("t") << "\n";
    return out.str();
}

inline nlohmann::ordered_json to_json(const RecurrenceGuess& r) {
    nlohmann::ordered_json doc;
    doc["order"] = r.order;
    doc["cutoff"] = r.cutoff;
    doc["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& c : r.coefficients)
        doc["coefficients"].push_back(c.str());
    doc["denominator"] = r.denominator().to_string("t");
    doc["characteristic"] = r.characteristic().to_string("x");
    return doc;
}

// ---------------------------------------------------------------------------
// Trend checks

struct TrendVerdict {
    bool holds = true;
    bool applicable = true; ///< false when the premise is absent and the verdict is vacuous
    std::string detail;
};

struct TrendReport {
    TrendVerdict bounded;          ///< period <= 2 and degree <= 2
    TrendVerdict polynomial;       ///< no Johnson orbit (loop-set reading) => period 1
    TrendVerdict polynomial_strict; ///< same, Johnson orbit must also have no edges
    TrendVerdict quadratic;        ///< degree 2 <=> some loop-free pair orbit
    int period = 0;
    int degree = 0;
    std::int64_t stable_degree = 0;
};

inline TrendReport check_trends(const ClassificationGraph& c, const QuasiPolynomialFit& fit) {
    TrendReport r;
    r.period = fit.period;
    r.degree = fit.degree;
    r.stable_degree = fit.stable_degree;
    const std::string shape =
        "period " + std::to_string(fit.period) + ", degree " + std::to_string(fit.degree);

    r.bounded.holds = fit.period <= 2 && fit.degree <= 2;
    r.bounded.detail = shape;

    auto polynomial = [&](bool has_johnson, const std::string& what) {
        TrendVerdict v;
        v.applicable = !has_johnson;
        v.holds = has_johnson || fit.period == 1;
        v.detail = shape + (has_johnson ? "; " : "; no ") + what;
        return v;
    };
    r.polynomial = polynomial(has_johnson_orbit(c), "Johnson orbit");
    r.polynomial_strict = polynomial(has_isolated_johnson_orbit(c), "isolated Johnson orbit");

    const bool free_orbit = has_quadratic_independent_orbit(c);
    r.quadratic.holds = (fit.degree == 2) == free_orbit;
    r.quadratic.detail =
        shape + (free_orbit ? "; loop-free pair orbit present" : "; no loop-free pair orbit");
    return r;
}

inline const char* verdict_text(const TrendVerdict& v) { return v.holds ? "HOLDS" : "VIOLATED"; }

inline nlohmann::ordered_json to_json(const TrendReport& r) {
    auto one = [](const TrendVerdict& v) {
        return nlohmann::ordered_json{
            {"verdict", verdict_text(v)}, {"applicable", v.applicable}, {"detail", v.detail}};
    };
    return {{"period", r.period},
            {"degree", r.degree},
            {"stable_degree", r.stable_degree},
            {"trend1_bounded", one(r.bounded)},
            {"trend2_polynomial", one(r.polynomial)},
            {"trend2_polynomial_strict", one(r.polynomial_strict)},
            {"trend3_quadratic", one(r.quadratic)}};
}

// ---------------------------------------------------------------------------
// Kneser unions

/// Closed-form independence number of build_kneser_union(k, r, n):
///   r >= 3, n >= 2r : C(n-1, r-1)
///   r == 2, n >= 2  : n if n <= 3k and 3 | n, else n-1
///   r == 1, n >= 0  : min(n, k)
/// Throws Unsupported elsewhere.
inline std::int64_t kneser_union_alpha_formula(int k, int r, int n) {
    if (k < 1 || r < 1 || n < 0)
        throw Unsupported("kneser_union_alpha_formula: need k >= 1, r >= 1, n >= 0");
    if (r == 1)
        return std::min(n, k);
    if (r == 2) {
        if (n < 2)
            throw Unsupported("r = 2 formula needs n >= 2");
        return (n <= 3 * k && n % 3 == 0) ? n : n - 1;
    }
    if (n < 2 * r)
        throw Unsupported("r >= 3 formula needs n >= 2r");
    return binomial64(n - 1, r - 1);
}

/// Largest independent set of one Kneser orbit whose labels draw from an
/// m-element set: 0 if m < r, C(m, r) if r <= m <= 2r-1, C(m-1, r-1) if m >= 2r.
inline std::int64_t partition_alpha_bound(int r, int m) {
    if (r < 1 || m < 0)
        throw std::invalid_argument("partition_alpha_bound: need r >= 1, m >= 0");
    if (m < r)
        return 0;
    if (m <= 2 * r - 1)
        return binomial64(m, r);
    return binomial64(m - 1, r - 1);
}

struct LemmaReport {
    std::int64_t checks_small_plus_large = 0; ///< C(a,r) + C(b,r-1) < C(a+b-1,r-1)
    std::int64_t checks_doubling = 0;         ///< 2 C(2r-1,r-1) < C(4r-3,r-1)
    std::int64_t checks_large_pair = 0;       ///< C(c,r-1) + C(d,r-1) < C(c+d-1,r-1)
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Exhaustively checks the three strict binomial inequalities behind the
/// Kneser-union closed form, for 3 <= r <= r_max and all admissible
/// a, b, c, d <= range_bound.
inline LemmaReport verify_binomial_lemmas(int r_max, int range_bound) {
    if (r_max < 3)
        throw std::invalid_argument("verify_binomial_lemmas: r_max must be >= 3");
    LemmaReport rep;
    for (int r = 3; r <= r_max; ++r) {
        for (int a = r; a <= 2 * r - 2 && a <= range_bound; ++a)
            for (int b = 2 * r - 1; b <= range_bound; ++b) {
                ++rep.checks_small_plus_large;
                if (!(binomial(a, r) + binomial(b, r - 1) < binomial(a + b - 1, r - 1)))
                    rep.violations.push_back("C(a,r)+C(b,r-1) < C(a+b-1,r-1) fails at r=" +
                                             std::to_string(r) + " a=" + std::to_string(a) +
                                             " b=" + std::to_string(b));
            }
        ++rep.checks_doubling;
        if (!(2 * binomial(2 * r - 1, r - 1) < binomial(4 * r - 3, r - 1)))
            rep.violations.push_back("2C(2r-1,r-1) < C(4r-3,r-1) fails at r=" + std::to_string(r));
        for (int c = 2 * r - 1; c <= range_bound; ++c)
            for (int d = 2 * r - 1; d <= range_bound; ++d) {
                ++rep.checks_large_pair;
                if (!(binomial(c, r - 1) + binomial(d, r - 1) < binomial(c + d - 1, r - 1)))
                    rep.violations.push_back("C(c,r-1)+C(d,r-1) < C(c+d-1,r-1) fails at r=" +
                                             std::to_string(r) + " c=" + std::to_string(c) +
                                             " d=" + std::to_string(d));
            }
    }
    return rep;
}

} // namespace figraph
