#include "mgeo/qs_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgeo/rng.hpp"

namespace mgeo {

namespace {

void require_same_points(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                         const char* who) {
    if (a.size() != b.size())
        throw domain_error(std::string(who) + ": spaces must share one point set");
}

} // namespace

std::vector<QuotientSample> qs_quotients(const FiniteMetricSpace& source,
                                         const FiniteMetricSpace& target,
                                         const TripleSampleSpec& spec) {
    require_same_points(source, target, "qs_quotients");
    const std::size_t n = source.size();
    std::vector<QuotientSample> out;

    auto add = [&](PointId p, PointId q, PointId s) {
        if (p == q || s == q) return;
        const double st = source(q, s);
        const double tt = target(q, s);
        if (st == 0.0 || tt == 0.0) return; // degenerate, skipped
        out.push_back({source(p, q) / st, target(p, q) / tt, p, q, s});
    };

    if (n <= spec.exhaustive_threshold) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t s = 0; s < n; ++s)
                    add(PointId(p), PointId(q), PointId(s));
        return out;
    }

    Rng rng(spec.seed);
    for (std::size_t i = 0; i < spec.sample_count; ++i)
        add(PointId(rng.below(n)), PointId(rng.below(n)), PointId(rng.below(n)));
    const auto& sub = spec.exhaustive_subset;
    for (PointId p : sub)
        for (PointId q : sub)
            for (PointId s : sub) add(p, q, s);
    return out;
}

double ModulusFit::operator()(double t) const {
    if (t < 0.0) throw domain_error("modulus evaluated at negative argument");
    if (family == ModulusFamily::linear) return C * t;
    if (t == 0.0) return 0.0;
    return C * std::max(std::pow(t, alpha), std::pow(t, 1.0 / alpha));
}

namespace {

// Upper convex hull (by Andrew's monotone chain) of a point cloud; used to
// maximize the linear functionals v - c*u over the samples for every c > 0.
std::vector<std::pair<double, double>> upper_hull(std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<double, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // Keep only left turns strictly below; pop b if it is under a-p.
            if ((b.first - a.first) * (p.second - a.second) -
                    (p.first - a.first) * (b.second - a.second) >=
                0.0)
                hull.pop_back();
            else
                break;
        }
        if (!hull.empty() && hull.back().first == p.first) {
            if (p.second > hull.back().second) hull.back() = p;
            continue;
        }
        hull.push_back(p);
    }
    return hull;
}

double max_linear(const std::vector<std::pair<double, double>>& hull, double c) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [u, v] : hull) best = std::max(best, v - c * u);
    return best;
}

} // namespace

ModulusFit fit_modulus(const std::vector<QuotientSample>& quotients, ModulusFamily family) {
    if (quotients.empty()) throw domain_error("fit_modulus: empty quotient list");
    ModulusFit fit;
    fit.family = family;

    if (family == ModulusFamily::linear) {
        double best = 1.0;
        for (const auto& qs : quotients) {
            if (qs.t <= 0.0) {
                if (qs.quotient > 0.0)
                    throw domain_error("fit_modulus: positive quotient at t = 0, no modulus fits");
                continue;
            }
            const double c = qs.quotient / qs.t;
            if (c > best) {
                best = c;
                fit.worst = qs;
            }
        }
        fit.C = best;
        fit.alpha = 1.0;
        return fit;
    }

    // Power-pair family. In log coordinates u = log t, v = log Q the
    // constraint reads log C >= v - u/alpha (u >= 0) and >= v - alpha*u
    // (u < 0); each branch is a maximum of linear functionals, evaluated on
    // the branch's upper convex hull. log C is nondecreasing in alpha, so we
    // take the largest grid alpha whose constant matches the minimum.
    std::vector<std::pair<double, double>> pos, neg;
    double at_zero = -std::numeric_limits<double>::infinity();
    for (const auto& qs : quotients) {
        if (qs.t <= 0.0) {
            if (qs.quotient > 0.0)
                throw domain_error("fit_modulus: positive quotient at t = 0, no modulus fits");
            continue;
        }
        if (qs.quotient <= 0.0) continue;
        const double u = std::log(qs.t);
        const double v = std::log(qs.quotient);
        if (u > 0.0)
            pos.push_back({u, v});
        else if (u < 0.0)
            neg.push_back({u, v});
        else
            at_zero = std::max(at_zero, v);
    }
    const auto hull_pos = upper_hull(std::move(pos));
    const auto hull_neg = upper_hull(std::move(neg));

    auto log_c = [&](double alpha) {
        double m = std::max(0.0, at_zero); // clamp keeps C >= 1
        if (!hull_pos.empty()) m = std::max(m, max_linear(hull_pos, 1.0 / alpha));
        if (!hull_neg.empty()) m = std::max(m, max_linear(hull_neg, alpha));
        return m;
    };

    const double min_log_c = log_c(0.01);
    double alpha = 0.01;
    for (int g = 100; g >= 1; --g) {
        const double a = g / 100.0;
        if (log_c(a) <= min_log_c + 1e-9) {
            alpha = a;
            break;
        }
    }
    fit.alpha = alpha;
    fit.C = std::exp(log_c(alpha));

    double tightest = -std::numeric_limits<double>::infinity();
    for (const auto& qs : quotients) {
        if (qs.t <= 0.0 || qs.quotient <= 0.0) continue;
        const double u = std::log(qs.t);
        const double margin = std::log(qs.quotient) - std::max(alpha * u, u / alpha);
        if (margin > tightest) {
            tightest = margin;
            fit.worst = qs;
        }
    }
    return fit;
}

double bilipschitz_constant(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    require_same_points(a, b, "bilipschitz_constant");
    if (a.size() < 2) throw domain_error("bilipschitz_constant: need at least two points");
    double L = 1.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double x = a(PointId(i), PointId(j));
            const double y = b(PointId(i), PointId(j));
            if (x == 0.0 || y == 0.0) {
                if (x != y) return std::numeric_limits<double>::infinity();
                continue;
            }
            L = std::max({L, x / y, y / x});
        }
    return L;
}

HoelderFit fit_hoelder(const FiniteMetricSpace& d_g, const FiniteMetricSpace& d) {
    require_same_points(d_g, d, "fit_hoelder");
    const std::size_t n = d_g.size();
    double su = 0, sv = 0, suu = 0, suv = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double x = d_g(PointId(i), PointId(j));
            const double y = d(PointId(i), PointId(j));
            if (!(x > 0.0) || !(x < 1.0) || !(y > 0.0)) continue;
            const double u = std::log(x), v = std::log(y);
            su += u;
            sv += v;
            suu += u * u;
            suv += u * v;
            ++count;
        }
    if (count == 0) throw domain_error("fit_hoelder: no pairs with d_g < 1");

    HoelderFit fit;
    const double denom = count * suu - su * su;
    fit.slope = denom != 0.0 ? (count * suv - su * sv) / denom : 1.0;

    fit.alpha = 0.1;
    for (int g = 10; g >= 1; --g) {
        const double a = g / 10.0;
        if (a <= fit.slope + 0.05) {
            fit.alpha = a;
            break;
        }
    }
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double x = d_g(PointId(i), PointId(j));
            const double y = d(PointId(i), PointId(j));
            if (!(x > 0.0) || !(x < 1.0)) continue;
            c = std::max(c, y / std::pow(x, fit.alpha));
        }
    fit.C = std::max(c, 1.0);
    return fit;
}

double gh_upper_identity(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    require_same_points(a, b, "gh_upper_identity");
    double worst = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            worst = std::max(worst,
                             std::abs(a(PointId(i), PointId(j)) - b(PointId(i), PointId(j))));
    return worst / 2.0;
}

namespace {

// Feasibility of a correspondence with distortion <= delta, searched as a
// pair of maps f: A -> B and g: B -> A whose combined relation is pairwise
// compatible. Every correspondence contains such a sub-relation, and
// distortion is monotone under inclusion, so this is exact.
struct CorrespondenceSearch {
    const FiniteMetricSpace& a;
    const FiniteMetricSpace& b;
    double delta;
    std::vector<std::pair<PointId, PointId>> chosen; // (a-point, b-point)

    bool compatible(std::pair<PointId, PointId> x, std::pair<PointId, PointId> y) const {
        return std::abs(a(x.first, y.first) - b(x.second, y.second)) <= delta;
    }

    bool fits(std::pair<PointId, PointId> cand) const {
        for (const auto& c : chosen)
            if (!compatible(c, cand)) return false;
        return true;
    }

    bool assign_a(std::size_t i) {
        if (i == a.size()) return assign_b(0);
        for (std::size_t k = 0; k < b.size(); ++k) {
            const std::pair<PointId, PointId> cand{PointId(i), PointId(k)};
            if (!fits(cand)) continue;
            chosen.push_back(cand);
            if (assign_a(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }

    bool assign_b(std::size_t k) {
        if (k == b.size()) return true;
        // Already covered by some f(i)?
        for (std::size_t c = 0; c < a.size(); ++c)
            if (chosen[c].second == PointId(k)) return assign_b(k + 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::pair<PointId, PointId> cand{PointId(i), PointId(k)};
            if (!fits(cand)) continue;
            chosen.push_back(cand);
            if (assign_b(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

GHBound gh_bruteforce(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                      std::size_t max_points) {
    if (a.size() > max_points || b.size() > max_points)
        throw domain_error("gh_bruteforce: space exceeds the exact-computation cap");
    if (a.size() == 0 || b.size() == 0)
        throw domain_error("gh_bruteforce: empty space");

    std::vector<double> candidates{0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l)
                    candidates.push_back(std::abs(a(PointId(i), PointId(j)) -
                                                  b(PointId(k), PointId(l))));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto feasible = [&](double delta) {
        CorrespondenceSearch search{a, b, delta, {}};
        search.chosen.reserve(a.size() + b.size());
        return search.assign_a(0);
    };

    std::size_t lo = 0, hi = candidates.size() - 1; // the full relation is always feasible at max
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    const double value = candidates[lo] / 2.0;
    return {value, value, GHMethod::brute_force};
}

CommonNetBound gh_via_common_net(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                                 const std::vector<PointId>& net, double mu, double eps) {
    require_same_points(a, b, "gh_via_common_net");
    if (net.empty()) throw domain_error("gh_via_common_net: empty net");
    auto worst_gap = [&](const FiniteMetricSpace& space) {
        double worst = 0.0;
        for (std::size_t p = 0; p < space.size(); ++p) {
            double best = std::numeric_limits<double>::infinity();
            for (PointId s : net) best = std::min(best, space(PointId(p), s));
            worst = std::max(worst, best);
        }
        return worst;
    };
    CommonNetBound out;
    out.worst_gap_a = worst_gap(a);
    out.worst_gap_b = worst_gap(b);
    out.density_ok = out.worst_gap_a < mu * eps && out.worst_gap_b < mu * eps;
    out.bound = 2.0 * mu * eps;
    out.identity_bound = gh_upper_identity(a, b);
    return out;
}

} // namespace mgeo
