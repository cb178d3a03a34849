#include "gt/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <set>

namespace gt {

namespace {

char inverse_letter(char c)
{
    switch (c) {
    case 'A': return 'a';
    case 'a': return 'A';
    case 'B': return 'b';
    case 'b': return 'B';
    }
    throw Error(ErrorCode::BadWord, std::string("unknown letter '") + c + "'");
}

Mat2 sl2_inverse(const Mat2& g)
{
    Mat2 r;
    r << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
    return r;
}

Mat3 lorentz_inverse(const Mat3& a) { return minkowski_j() * a.transpose() * minkowski_j(); }

Vec2 klein(const Vec3& v) { return Vec2(v(1) / v(0), v(2) / v(0)); }

Vec3 positive_null(Vec3 v)
{
    if (v(0) < 0.0) v = -v;
    return v / v(0);
}

// Kernel of a rank-2 matrix from the best-conditioned pair of rows.
Vec3 kernel_rank2(const Mat3& m)
{
    Vec3 best = Vec3::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Vec3 c = m.row(i).transpose().cross(m.row(j).transpose());
            if (c.norm() > best.norm()) best = c;
        }
    return best;
}

// Separating-axis test for two convex polygons given as ordered vertex lists.
bool convex_intersect(const std::vector<Vec2>& p, const std::vector<Vec2>& q, double tol)
{
    auto separated_along = [&](const std::vector<Vec2>& poly) {
        std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 e = poly[(i + 1) % n] - poly[i];
            if (e.norm() < 1e-15) continue;
            Vec2 nrm(-e(1), e(0));
            nrm.normalize();
            double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
            for (const auto& v : p) {
                double d = nrm.dot(v);
                pmin = std::min(pmin, d);
                pmax = std::max(pmax, d);
            }
            for (const auto& v : q) {
                double d = nrm.dot(v);
                qmin = std::min(qmin, d);
                qmax = std::max(qmax, d);
            }
            if (pmax < qmin - tol || qmax < pmin - tol) return true;
        }
        return false;
    };
    return !separated_along(p) && !separated_along(q);
}

double klein_affine(const Vec3& eta, const Vec2& z) { return mink(eta, Vec3(1.0, z(0), z(1))); }

}  // namespace

std::string reduce_word(const std::string& w)
{
    std::string out;
    for (char c : w) {
        char inv = inverse_letter(c);
        if (!out.empty() && out.back() == inv)
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

std::string inverse_word(const std::string& w)
{
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
    return out;
}

void validate_word(const std::string& w)
{
    for (char c : w) inverse_letter(c);
}

double fricke_residual(const TeichPoint& tp)
{
    return tp.x * tp.x + tp.y * tp.y + tp.z * tp.z - tp.x * tp.y * tp.z;
}

Mat3 lorentz_of_sl2(const Mat2& g)
{
    Mat3 l;
    for (int j = 0; j < 3; ++j) {
        Vec3 e = Vec3::Zero();
        e(j) = 1.0;
        Mat2 s;
        s << e(0) + e(1), e(2), e(2), e(0) - e(1);
        Mat2 t = g * s * g.transpose();
        l(0, j) = 0.5 * (t(0, 0) + t(1, 1));
        l(1, j) = 0.5 * (t(0, 0) - t(1, 1));
        l(2, j) = 0.5 * (t(0, 1) + t(1, 0));
    }
    return l;
}

Mat2 FuchsianGroup::eval(const std::string& word) const
{
    Mat2 m = Mat2::Identity();
    for (char c : word) {
        switch (c) {
        case 'A': m = m * generators[0]; break;
        case 'a': m = m * sl2_inverse(generators[0]); break;
        case 'B': m = m * generators[1]; break;
        case 'b': m = m * sl2_inverse(generators[1]); break;
        default: throw Error(ErrorCode::BadWord, std::string("unknown letter '") + c + "'");
        }
    }
    return m;
}

Mat3 FuchsianGroup::lorentz(const std::string& word) const
{
    Mat3 m = Mat3::Identity();
    for (char c : word) {
        switch (c) {
        case 'A': m = m * lorentz_generators[0]; break;
        case 'a': m = m * lorentz_inverse(lorentz_generators[0]); break;
        case 'B': m = m * lorentz_generators[1]; break;
        case 'b': m = m * lorentz_inverse(lorentz_generators[1]); break;
        default: throw Error(ErrorCode::BadWord, std::string("unknown letter '") + c + "'");
        }
    }
    return m;
}

FuchsianGroup punctured_torus_from_generators(const Mat2& a, const Mat2& b)
{
    for (const Mat2* g : {&a, &b})
        if (std::abs(g->determinant() - 1.0) > 1e-9) throw Error(ErrorCode::BadTraces, "generator is not in SL(2,R)");
    FuchsianGroup gp;
    gp.generators = {a, b};
    gp.lorentz_generators = {lorentz_of_sl2(a), lorentz_of_sl2(b)};
    gp.cusp_words = {"ABab"};
    double tc = gp.eval("ABab").trace();
    if (std::abs(tc + 2.0) > 1e-9) throw Error(ErrorCode::BadTraces, "commutator trace is not -2");
    return gp;
}

FuchsianGroup build_punctured_torus(const TeichPoint& tp)
{
    if (tp.x <= 2.0 || tp.y <= 2.0 || tp.z <= 2.0) throw Error(ErrorCode::BadTraces, "every trace must exceed 2");
    double scale = std::max(1.0, tp.x * tp.y * tp.z);
    if (std::abs(fricke_residual(tp)) > 1e-9 * scale)
        throw Error(ErrorCode::BadTraces, "traces violate x^2 + y^2 + z^2 = xyz");
    double lam = 0.5 * (tp.x + std::sqrt(tp.x * tp.x - 4.0));
    Mat2 a;
    a << lam, 0.0, 0.0, 1.0 / lam;
    double p = (tp.z - tp.y / lam) / (lam - 1.0 / lam);
    double s = tp.y - p;
    double qr = p * s - 1.0;
    double r, q;
    if (qr > 0.0) {
        r = q = std::sqrt(qr);
    } else if (qr < 0.0) {
        r = std::sqrt(-qr);
        q = -r;
    } else {
        r = 1.0;
        q = 0.0;
    }
    Mat2 b;
    b << p, q, r, s;
    return punctured_torus_from_generators(a, b);
}

SpacelikeGeodesicH2 axis_of_lorentz(const Mat3& l)
{
    double tr = l.trace();
    double c = 0.5 * (tr - 1.0);  // cosh of the translation length
    if (!(c > 1.0 + 1e-12)) throw Error(ErrorCode::NotHyperbolic, "not a hyperbolic element");
    double el = c + std::sqrt(c * c - 1.0);
    Mat3 id = Mat3::Identity();
    auto dominant_column = [](const Mat3& m) {
        int k = 0;
        for (int j = 1; j < 3; ++j)
            if (m.col(j).norm() > m.col(k).norm()) k = j;
        return Vec3(m.col(k));
    };
    Vec3 plus = positive_null(dominant_column((l - id) * (l - id / el)));
    Vec3 minus = positive_null(dominant_column((l - id) * (l - el * id)));
    return SpacelikeGeodesicH2::from_endpoints(minus, plus);
}

SpacelikeGeodesicH2 axis(const Mat2& g)
{
    double tr = g.trace();
    if (!(std::abs(tr) > 2.0 + 1e-12)) throw Error(ErrorCode::NotHyperbolic, "|tr| <= 2");
    // an eigenvector v of g gives the null vector of the rank one matrix v v^T
    double root = std::sqrt(tr * tr - 4.0);
    double big = 0.5 * (tr + std::copysign(root, tr));
    double small = 1.0 / big;
    auto null_of = [&](double lam) {
        Vec2 v1(g(0, 1), lam - g(0, 0)), v2(lam - g(1, 1), g(1, 0));
        Vec2 v = v1.norm() >= v2.norm() ? v1 : v2;
        v.normalize();
        return Vec3(0.5 * (v(0) * v(0) + v(1) * v(1)), 0.5 * (v(0) * v(0) - v(1) * v(1)), v(0) * v(1));
    };
    return SpacelikeGeodesicH2::from_endpoints(null_of(small), null_of(big));
}

double translation_length(const Mat2& g)
{
    double t = std::abs(g.trace());
    return t > 2.0 ? 2.0 * std::acosh(0.5 * t) : 0.0;
}

WeightedMulticurve WeightedMulticurve::scaled(double c) const
{
    WeightedMulticurve out = *this;
    for (auto& comp : out.components) comp.weight *= c;
    return out;
}

LeafEnumerator::LeafEnumerator(const FuchsianGroup& group, const WeightedMulticurve& mc, std::size_t node_budget)
    : group_(group), mc_(mc), budget_(node_budget)
{
    for (const auto& comp : mc_.components) {
        validate_word(comp.word);
        if (!(comp.weight > 0.0)) throw Error(ErrorCode::ConfigError, "multicurve weights must be positive");
    }

    // Ideal quadrilateral v1 v2 v3 v4 with A: v1v2 -> v4v3 and B: v1v4 -> v2v3;
    // v3 is the fixed point of the commutator ABab.
    Vec3 v3 = positive_null(kernel_rank2(group_.lorentz("ABab") - Mat3::Identity()));
    Vec3 v4 = positive_null(group_.lorentz("b") * v3);
    Vec3 v1 = positive_null(group_.lorentz("ab") * v3);
    Vec3 v2 = positive_null(group_.lorentz("Bab") * v3);
    vertices_ = {v1, v2, v3, v4};

    std::vector<double> ang;
    for (const auto& v : vertices_) ang.push_back(std::atan2(v(2), v(1)));
    auto ccw = [&](int i, int j, int k) {
        auto d = [](double x, double y) {
            double r = std::fmod(y - x + 4 * std::numbers::pi, 2 * std::numbers::pi);
            return r;
        };
        return d(ang[i], ang[j]) < d(ang[i], ang[k]);
    };
    bool fwd = ccw(0, 1, 2) && ccw(0, 2, 3) && ccw(1, 2, 3);
    bool bwd = ccw(0, 3, 2) && ccw(0, 2, 1) && ccw(3, 2, 1);
    if (!fwd && !bwd) throw Error(ErrorCode::BadTraces, "ideal fundamental quadrilateral is not embedded");

    center_ = Vec2::Zero();
    for (const auto& v : vertices_) center_ += klein(v);
    center_ /= 4.0;

    for (std::size_t ci = 0; ci < mc_.components.size(); ++ci) {
        const std::string& w = mc_.components[ci].word;
        Mat3 lw = group_.lorentz(w);
        SpacelikeGeodesicH2 ax = axis_of_lorentz(lw);
        Vec3 c = radial_lift(center_);
        Vec3 p = c - mink(c, ax.eta) * ax.eta;
        p /= std::sqrt(-mink(p, p));
        Vec3 wp = lw * p;
        std::vector<Vec2> seg = {klein(p), klein(wp)};
        std::vector<Vec2> path = {center_, klein(p), klein(wp)};
        for (const auto& tile : tiles_meeting(path, seg)) {
            Vec3 eta = lorentz_inverse(tile.l) * ax.eta;
            bool dup = false;
            for (const auto& ex : local_) {
                double sc = std::max(1.0, eta.cwiseAbs().maxCoeff());
                if ((ex.leaf.eta - eta).cwiseAbs().maxCoeff() < 1e-8 * sc ||
                    (ex.leaf.eta + eta).cwiseAbs().maxCoeff() < 1e-8 * sc) {
                    dup = true;
                    break;
                }
            }
            if (!dup) local_.push_back({SpacelikeGeodesicH2(eta), int(ci), reduce_word(inverse_word(tile.word))});
        }
    }
}

std::vector<LeafEnumerator::Tile> LeafEnumerator::tiles_meeting(const std::vector<Vec2>& path,
                                                                 const std::vector<Vec2>& target) const
{
    std::vector<Tile> hits;
    std::deque<Tile> queue;
    queue.push_back({"", Mat3::Identity()});
    std::size_t visited = 0;
    const char letters[4] = {'A', 'B', 'a', 'b'};
    while (!queue.empty()) {
        Tile t = queue.front();
        queue.pop_front();
        if (++visited > budget_)
            throw Error(ErrorCode::EnumerationBudgetExceeded, "tile enumeration exceeded the node budget");
        std::vector<Vec2> poly;
        for (const auto& v : vertices_) poly.push_back(klein(t.l * v));
        // tiles meeting a connected polyline are connected through shared edges
        bool on_path = false;
        for (std::size_t i = 0; i + 1 < path.size() && !on_path; ++i)
            on_path = convex_intersect(poly, {path[i], path[i + 1]}, 1e-12);
        if (!on_path) continue;
        if (convex_intersect(poly, target, 1e-12)) hits.push_back(t);
        for (char c : letters) {
            if (!t.word.empty() && t.word.back() == inverse_letter(c)) continue;
            queue.push_back({t.word + c, t.l * group_.lorentz(std::string(1, c))});
        }
    }
    return hits;
}

std::vector<LeafEnumerator::NearLeaf> LeafEnumerator::leaves_near_segment(const Vec2& x, const Vec2& y) const
{
    Vec3 xh = radial_lift(x);
    Vec3 yh = radial_lift(y);
    std::vector<Vec2> seg = {x, y};
    std::vector<Vec2> path = {center_, x, y};
    std::vector<NearLeaf> out;
    for (const auto& tile : tiles_meeting(path, seg)) {
        for (const auto& loc : local_) {
            Vec3 eta = tile.l * loc.leaf.eta;
            double fx = mink(eta, xh);
            double fy = mink(eta, yh);
            bool meets = (fx <= kEpsGeom && fy >= -kEpsGeom) || (fx >= -kEpsGeom && fy <= kEpsGeom);
            if (!meets) continue;
            double sc = std::max(1.0, eta.cwiseAbs().maxCoeff());
            bool dup = false;
            for (const auto& ex : out) {
                if ((ex.leaf.eta - eta).cwiseAbs().maxCoeff() < 1e-8 * sc ||
                    (ex.leaf.eta + eta).cwiseAbs().maxCoeff() < 1e-8 * sc) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back({SpacelikeGeodesicH2(eta), loc.component, reduce_word(tile.word + loc.group_element)});
        }
    }
    return out;
}

std::vector<LeafCrossing> LeafEnumerator::crossings(const Vec2& x, const Vec2& y, bool skip_endpoint) const
{
    std::vector<LeafCrossing> out;
    if ((x - y).norm() == 0.0) return out;
    Vec3 xh = radial_lift(x);
    Vec3 yh = radial_lift(y);
    for (const auto& nl : leaves_near_segment(x, y)) {
        double fx = mink(nl.leaf.eta, xh);
        double fy = mink(nl.leaf.eta, yh);
        if (std::abs(fx) < kEpsGeom || std::abs(fy) < kEpsGeom) {
            if (skip_endpoint) continue;
            throw Error(ErrorCode::EndpointOnLeaf, "segment endpoint lies on a leaf");
        }
        if ((fx > 0.0) == (fy > 0.0)) continue;
        LeafCrossing lc;
        lc.leaf = fy > 0.0 ? nl.leaf : nl.leaf.reversed();
        lc.weight = mc_.components[nl.component].weight;
        double ax = klein_affine(lc.leaf.eta, x);
        double ay = klein_affine(lc.leaf.eta, y);
        lc.parameter = ax / (ax - ay);
        lc.group_element = nl.group_element;
        lc.component = nl.component;
        out.push_back(lc);
    }
    std::sort(out.begin(), out.end(), [](const LeafCrossing& a, const LeafCrossing& b) { return a.parameter < b.parameter; });
    return out;
}

std::vector<LeafCrossing> leaves_crossing(const FuchsianGroup& group, const WeightedMulticurve& mc, const Vec2& x,
                                          const Vec2& y)
{
    return LeafEnumerator(group, mc).crossings(x, y);
}

double multicurve_length(const FuchsianGroup& group, const WeightedMulticurve& mc)
{
    double s = 0.0;
    for (const auto& comp : mc.components) s += comp.weight * translation_length(group.eval(comp.word));
    return s;
}

double multicurve_length(const TeichPoint& tp, const WeightedMulticurve& mc)
{
    return multicurve_length(build_punctured_torus(tp), mc);
}

int intersection_count(const FuchsianGroup& group, const WeightedMulticurve& mc, const std::string& word)
{
    LeafEnumerator en(group, mc);
    Mat3 lw = group.lorentz(word);
    SpacelikeGeodesicH2 ax = axis_of_lorentz(lw);
    Vec3 c = radial_lift(en.domain_center());
    Vec3 p0 = c - mink(c, ax.eta) * ax.eta;
    p0 /= std::sqrt(-mink(p0, p0));
    Vec3 u = mink_cross(ax.eta, p0);
    u /= std::sqrt(mink(u, u));
    const double s = 0.1234567;
    Vec3 p = std::cosh(s) * p0 + std::sinh(s) * u;
    Vec3 q = lw * p;
    int count = 0;
    for (const auto& nl : en.leaves_near_segment(radial_project(p), radial_project(q))) {
        double fp = mink(nl.leaf.eta, p);
        double fq = mink(nl.leaf.eta, q);
        if (std::abs(fp) < 1e-9 && std::abs(fq) < 1e-9) continue;
        if ((fp > 0.0) != (fq > 0.0) && std::abs(fp) > 1e-12 && std::abs(fq) > 1e-12) ++count;
    }
    return count;
}

TeichPoint teich_from_chart(double l, double w)
{
    double r = 2.0 / std::tanh(l);
    return {2.0 * std::cosh(l), r * std::cosh(w - 0.5 * l), r * std::cosh(w + 0.5 * l)};
}

Vec2 chart_from_teich(const TeichPoint& tp)
{
    double l = std::acosh(0.5 * tp.x);
    double th = std::tanh(l);
    double yy = 0.5 * tp.y * th;
    double zz = 0.5 * tp.z * th;
    double w = std::asinh((zz - yy) / (2.0 * std::sinh(0.5 * l)));
    return Vec2(std::log(l), w);
}

double kerckhoff_objective(const Vec2& chart, const WeightedMulticurve& lambda, const WeightedMulticurve& mu)
{
    TeichPoint tp = teich_from_chart(std::exp(chart(0)), chart(1));
    FuchsianGroup g = build_punctured_torus(tp);
    return multicurve_length(g, lambda) + multicurve_length(g, mu);
}

Vec2 kerckhoff_gradient(const Vec2& chart, const WeightedMulticurve& lambda, const WeightedMulticurve& mu, double h)
{
    Vec2 g;
    for (int i = 0; i < 2; ++i) {
        Vec2 e = Vec2::Zero();
        e(i) = h;
        g(i) = (kerckhoff_objective(chart + e, lambda, mu) - kerckhoff_objective(chart - e, lambda, mu)) / (2 * h);
    }
    return g;
}

namespace {

Vec2 gradient4(const Vec2& x, const WeightedMulticurve& l, const WeightedMulticurve& m, double h)
{
    Vec2 g;
    for (int i = 0; i < 2; ++i) {
        Vec2 e = Vec2::Zero();
        e(i) = h;
        g(i) = (-kerckhoff_objective(x + 2 * e, l, m) + 8 * kerckhoff_objective(x + e, l, m) -
                8 * kerckhoff_objective(x - e, l, m) + kerckhoff_objective(x - 2 * e, l, m)) /
               (12 * h);
    }
    return g;
}

Mat2 hessian(const Vec2& x, const WeightedMulticurve& l, const WeightedMulticurve& m, double h)
{
    Mat2 hs;
    double f0 = kerckhoff_objective(x, l, m);
    for (int i = 0; i < 2; ++i) {
        Vec2 e = Vec2::Zero();
        e(i) = h;
        hs(i, i) = (kerckhoff_objective(x + e, l, m) - 2 * f0 + kerckhoff_objective(x - e, l, m)) / (h * h);
    }
    Vec2 e0(h, 0), e1(0, h);
    hs(0, 1) = hs(1, 0) = (kerckhoff_objective(x + e0 + e1, l, m) - kerckhoff_objective(x + e0 - e1, l, m) -
                           kerckhoff_objective(x - e0 + e1, l, m) + kerckhoff_objective(x - e0 - e1, l, m)) /
                          (4 * h * h);
    return hs;
}

// Nelder-Mead on a 2-dimensional chart; objective failures count as +inf.
Vec2 nelder_mead(const Vec2& x0, double step, const WeightedMulticurve& l, const WeightedMulticurve& m, int max_iter,
                 int& iters)
{
    auto f = [&](const Vec2& x) {
        try {
            return kerckhoff_objective(x, l, m);
        } catch (const Error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    std::vector<Vec2> s = {x0, x0 + Vec2(step, 0), x0 + Vec2(0, step)};
    std::vector<double> fs = {f(s[0]), f(s[1]), f(s[2])};
    for (iters = 0; iters < max_iter; ++iters) {
        std::vector<int> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        std::vector<Vec2> s2 = {s[idx[0]], s[idx[1]], s[idx[2]]};
        std::vector<double> f2 = {fs[idx[0]], fs[idx[1]], fs[idx[2]]};
        s = s2;
        fs = f2;
        if (std::abs(fs[2] - fs[0]) < 1e-15 && (s[2] - s[0]).norm() < 1e-9) break;
        Vec2 c = 0.5 * (s[0] + s[1]);
        Vec2 xr = c + (c - s[2]);
        double fr = f(xr);
        if (fr < fs[0]) {
            Vec2 xe = c + 2.0 * (c - s[2]);
            double fe = f(xe);
            if (fe < fr) {
                s[2] = xe;
                fs[2] = fe;
            } else {
                s[2] = xr;
                fs[2] = fr;
            }
        } else if (fr < fs[1]) {
            s[2] = xr;
            fs[2] = fr;
        } else {
            Vec2 xc = (fr < fs[2]) ? Vec2(c + 0.5 * (xr - c)) : Vec2(c + 0.5 * (s[2] - c));
            double fc = f(xc);
            if (fc < std::min(fr, fs[2])) {
                s[2] = xc;
                fs[2] = fc;
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i] = s[0] + 0.5 * (s[i] - s[0]);
                    fs[i] = f(s[i]);
                }
            }
        }
    }
    return fs[0] <= fs[1] && fs[0] <= fs[2] ? s[0] : (fs[1] <= fs[2] ? s[1] : s[2]);
}

std::vector<std::string> filling_candidates()
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    const std::string letters = "ABab";
    std::vector<std::string> frontier = {""};
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::string> next;
        for (const auto& w : frontier)
            for (char c : letters) {
                std::string v = w + c;
                if (reduce_word(v) != v) continue;
                next.push_back(v);
            }
        frontier = next;
        for (const auto& w : frontier) {
            if (reduce_word(w + w) != w + w) continue;  // not cyclically reduced
            bool power = false;
            for (std::size_t d = 1; d < w.size(); ++d) {
                if (w.size() % d != 0) continue;
                std::string rep;
                while (rep.size() < w.size()) rep += w.substr(0, d);
                if (rep == w) power = true;
            }
            if (power) continue;
            // canonical representative up to rotation and inversion
            std::string best = w;
            for (const std::string& base : {w, inverse_word(w)})
                for (std::size_t r = 0; r < base.size(); ++r) best = std::min(best, base.substr(r) + base.substr(0, r));
            if (seen.insert(best).second) out.push_back(w);
        }
    }
    return out;
}

}  // namespace

KerckhoffResult kerckhoff_point(const WeightedMulticurve& lambda, const WeightedMulticurve& mu, const TeichPoint& init,
                                unsigned seed)
{
    KerckhoffResult res;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-0.15, 0.15);
    Vec2 x = chart_from_teich(init);
    if (seed != 0) x += Vec2(unif(rng), unif(rng));

    int nm_iters = 0;
    x = nelder_mead(x, 0.2, lambda, mu, 4000, nm_iters);
    res.iterations = nm_iters;

    // Newton polish with a fourth-order gradient.
    for (int it = 0; it < 50; ++it) {
        Vec2 g = gradient4(x, lambda, mu, 1e-3);
        if (g.norm() < 1e-11) break;
        Mat2 h = hessian(x, lambda, mu, 1e-4);
        Eigen::SelfAdjointEigenSolver<Mat2> es(h);
        Vec2 step = (es.eigenvalues().minCoeff() > 0.0) ? Vec2(-h.ldlt().solve(g)) : Vec2(-0.1 * g);
        double gn = g.norm();
        double a = 1.0;
        for (int k = 0; k < 30; ++k, a *= 0.5) {
            Vec2 xn = x + a * step;
            try {
                if (gradient4(xn, lambda, mu, 1e-3).norm() < gn) {
                    x = xn;
                    break;
                }
            } catch (const Error&) {
            }
        }
        ++res.iterations;
    }

    res.chart = x;
    res.point = teich_from_chart(std::exp(x(0)), x(1));
    res.objective = kerckhoff_objective(x, lambda, mu);
    res.gradient_norm = kerckhoff_gradient(x, lambda, mu).norm();
    Mat2 h = hessian(x, lambda, mu, 1e-4);
    Eigen::SelfAdjointEigenSolver<Mat2> es(h);
    double lo = es.eigenvalues().cwiseAbs().minCoeff();
    double hi = es.eigenvalues().cwiseAbs().maxCoeff();
    res.hessian_condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (!(res.gradient_norm < 1e-7)) throw Error(ErrorCode::NoConvergence, "gradient did not vanish");

    FuchsianGroup gp = build_punctured_torus(res.point);
    for (const auto& w : filling_candidates()) {
        if (std::abs(gp.eval(w).trace()) <= 2.0) continue;
        int n = intersection_count(gp, lambda, w) + intersection_count(gp, mu, w);
        if (n == 0) {
            res.filling_ok = false;
            res.filling_failures.push_back(w);
        }
    }
    return res;
}

}  // namespace gt
