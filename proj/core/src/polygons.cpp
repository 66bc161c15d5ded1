#include "omf/polygons.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace omf {

PolySide PolySide::finite(const Rat& slope, long long s, const Rat& u, long long d) {
    check_internal(d == 0 || slope.sign() < 0, "finite side must have negative slope");
    PolySide r;
    r.inf_ = false;
    r.h_ = -slope.num();
    r.e_ = slope.den();
    r.d_ = d;
    r.s_ = s;
    r.u_ = u;
    return r;
}

PolySide PolySide::infinite(long long len, long long s, const Rat& u) {
    check_internal(len >= 1, "infinite side needs positive length");
    PolySide r;
    r.inf_ = true;
    r.len_ = len;
    r.e_ = to_int(len);
    r.d_ = 1;
    r.s_ = s;
    r.u_ = u;
    return r;
}

Rat PolySide::slope() const {
    check_internal(!inf_, "slope of a side of slope -infinity");
    return Rat(-h_, e_);
}

Rat PolySide::end_y() const {
    if (inf_) return u_;
    return u_ - Rat(to_int(d_) * h_);
}

bool PolySide::operator==(const PolySide& o) const {
    if (inf_ != o.inf_) return false;
    if (inf_) return len_ == o.len_ && s_ == o.s_ && u_ == o.u_;
    if (d_ != o.d_ || s_ != o.s_ || u_ != o.u_) return false;
    if (d_ == 0) return true; // vertices carry no slope
    return h_ == o.h_ && e_ == o.e_;
}

PrincipalPolygon PrincipalPolygon::point(long long x, const Rat& y) {
    PrincipalPolygon n;
    n.sx_ = x;
    n.sy_ = y;
    return n;
}

long long PrincipalPolygon::end_x() const {
    long long x = sx_;
    for (const auto& s : sides_) x += s.length();
    return x;
}

Rat PrincipalPolygon::end_y() const {
    return sides_.empty() ? sy_ : sides_.back().end_y();
}

long long PrincipalPolygon::length() const {
    long long l = inf_len_;
    for (const auto& s : sides_) l += s.length();
    return l;
}

ValInf PrincipalPolygon::y_at(long long x) const {
    check_internal(x >= begin_x() && x <= end_x(), "abscissa outside the polygon");
    if (x < sx_) return ValInf::infinity();
    Rat y = sy_;
    long long cx = sx_;
    for (const auto& s : sides_) {
        long long nx = cx + s.length();
        if (x <= nx) return ValInf(y + s.slope() * Rat(x - cx));
        cx = nx;
        y = s.end_y();
    }
    return ValInf(y);
}

std::vector<std::pair<long long, Rat>> PrincipalPolygon::vertices() const {
    std::vector<std::pair<long long, Rat>> v;
    v.emplace_back(sx_, sy_);
    long long x = sx_;
    for (const auto& s : sides_) {
        x += s.length();
        v.emplace_back(x, s.end_y());
    }
    return v;
}

bool PrincipalPolygon::operator==(const PrincipalPolygon& o) const {
    if (inf_len_ != o.inf_len_ || sx_ != o.sx_ || sy_ != o.sy_) return false;
    if (sides_.size() != o.sides_.size()) return false;
    for (size_t i = 0; i < sides_.size(); ++i)
        if (!(sides_[i] == o.sides_[i])) return false;
    return true;
}

void PrincipalPolygon::append_side(const Rat& slope, long long d) {
    check_internal(slope.sign() < 0 && d >= 1, "appended side must have negative slope");
    if (!sides_.empty())
        check_internal(sides_.back().slope() < slope, "sides must have strictly increasing slopes");
    long long x = end_x();
    Rat y = end_y();
    sides_.push_back(PolySide::finite(slope, x, y, d));
}

PrincipalPolygon principal_envelope(const std::vector<PolyPoint>& points) {
    std::vector<std::pair<long long, Rat>> finite;
    for (const auto& p : points) {
        if (!p.y.is_infinite()) finite.emplace_back(p.x, p.y.finite());
    }
    require(!finite.empty(), errc::no_finite_point, "no point with finite ordinate");
    std::sort(finite.begin(), finite.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < finite.size(); ++i)
        require(finite[i].first != finite[i - 1].first, errc::no_finite_point,
                "abscissas must be distinct");

    // Lower convex hull, monotone chain with exact rational cross products.
    std::vector<std::pair<long long, Rat>> hull;
    for (const auto& pt : finite) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b iff it is strictly below segment a..pt
            Rat lhs = (b.second - a.second) * Rat(pt.first - a.first);
            Rat rhs = (pt.second - a.second) * Rat(b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }

    PrincipalPolygon n;
    long long first_x = finite.front().first;
    n.set_inf_length(first_x);
    n.set_start(first_x, finite.front().second);
    for (size_t i = 1; i < hull.size(); ++i) {
        Rat slope = (hull[i].second - hull[i - 1].second) / Rat(hull[i].first - hull[i - 1].first);
        if (slope.sign() >= 0) break;
        // slope = -h/e in lowest terms; the edge spans d*e abscissas
        Int e = slope.den();
        long long span = hull[i].first - hull[i - 1].first;
        Int d = divexact(to_int(span), e);
        n.append_side(slope, to_ll(d));
    }
    return n;
}

PrincipalPolygon polygon_add(const PrincipalPolygon& N, const PrincipalPolygon& M) {
    PrincipalPolygon r;
    r.set_inf_length(N.inf_length() + M.inf_length());
    r.set_start(N.start_x() + M.start_x(), N.start_y() + M.start_y());
    std::map<Rat, long long> by_slope; // Rat has operator<
    for (const auto& s : N.sides()) by_slope[s.slope()] += s.degree();
    for (const auto& s : M.sides()) by_slope[s.slope()] += s.degree();
    for (const auto& [slope, d] : by_slope) r.append_side(slope, d);
    return r;
}

PolySide lambda_component(const PrincipalPolygon& N, const Rat& lambda) {
    check_internal(lambda.sign() < 0, "lambda must be negative");
    long long x = N.start_x();
    Rat y = N.start_y();
    for (const auto& s : N.sides()) {
        if (s.slope() == lambda) return s;
        if (s.slope() > lambda) break; // supporting line touches the vertex before this side
        x = s.end_x();
        y = s.end_y();
    }
    return PolySide::vertex(x, y);
}

namespace {

Int side_index(const PolySide& s) {
    if (s.is_infinite() || s.degree() == 0) return to_int(0);
    Int E = to_int(s.length());
    Int H = to_int(s.degree()) * s.h();
    return divexact(E * H - E - H + to_int(s.degree()), to_int(2));
}

} // namespace

Int polygon_index(const PrincipalPolygon& N) {
    for (const auto& [x, y] : N.vertices())
        check_internal(y.is_integer(), "polygon_index needs integer vertex ordinates");
    Int total = 0;
    // per-side triangles
    for (const auto& s : N.sides()) total += side_index(s);
    // cross rectangles among finite sides (ordered by increasing slope)
    const auto& sides = N.sides();
    for (size_t i = 0; i < sides.size(); ++i)
        for (size_t j = i + 1; j < sides.size(); ++j)
            total += to_int(sides[i].length()) * to_int(sides[j].degree()) * sides[j].h();
    // the infinite side contributes its length times the finite height
    if (N.inf_length() > 0) total += to_int(N.inf_length()) * N.finite_height().num();
    Int lattice = polygon_index_lattice_count(N);
    check_internal(total == lattice, "polygon index formula disagrees with lattice count");
    return total;
}

Int polygon_index_lattice_count(const PrincipalPolygon& N) {
    Int total = 0;
    long long i1 = N.start_x();
    long long i2 = N.end_x();
    Rat base = N.end_y();
    for (long long x = i1 + 1; x < i2; ++x) {
        Rat d = N.y_at(x).finite() - base;
        total += d.floor();
    }
    if (N.inf_length() > 0) total += to_int(N.inf_length()) * N.finite_height().num();
    return total;
}

std::string polygon_to_json(const PrincipalPolygon& N) {
    std::ostringstream os;
    os << "{\"inf_length\":" << N.inf_length() << ",\"vertices\":[";
    auto vs = N.vertices();
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << "[" << vs[i].first << ",\"" << vs[i].second.str() << "\"]";
    }
    os << "],\"slopes\":[";
    for (size_t i = 0; i < N.sides().size(); ++i) {
        if (i) os << ',';
        os << '"' << N.sides()[i].slope().str() << '"';
    }
    os << "]}";
    return os.str();
}

namespace {

double rat_to_double(const Rat& r) {
    return mpq_class(r.num(), r.den()).get_d();
}

} // namespace

std::string polygon_to_svg(const PrincipalPolygon& N, const std::vector<PolyPoint>& marked) {
    auto vs = N.vertices();
    double maxy = rat_to_double(vs.front().second);
    for (const auto& p : marked)
        if (!p.y.is_infinite()) maxy = std::max(maxy, rat_to_double(p.y.finite()));
    long long maxx = std::max<long long>(N.end_x(), 1);
    maxy = std::max(maxy, 1.0);
    const double sc = 40.0;
    const double pad = 30.0;
    double W = pad * 2 + sc * static_cast<double>(maxx);
    double H = pad * 2 + sc * maxy;
    auto X = [&](double x) { return pad + sc * x; };
    auto Y = [&](double y) { return H - pad - sc * y; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    // lattice gridlines
    for (long long gx = 0; gx <= maxx; ++gx)
        os << "<line x1=\"" << X(gx) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(gx) << "\" y2=\""
           << Y(maxy) << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    for (long long gy = 0; gy <= static_cast<long long>(maxy + 0.5); ++gy)
        os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(gy) << "\" x2=\"" << X(maxx) << "\" y2=\""
           << Y(gy) << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    // axes
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(maxx) << "\" y2=\"" << Y(0)
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(maxy)
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    // polygon path
    os << "<path d=\"M";
    for (size_t i = 0; i < vs.size(); ++i) {
        os << (i ? " L" : " ") << X(static_cast<double>(vs[i].first)) << " "
           << Y(rat_to_double(vs[i].second));
    }
    os << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2.5\"/>\n";
    // infinite side marker
    if (N.inf_length() > 0)
        os << "<line x1=\"" << X(static_cast<double>(N.begin_x())) << "\" y1=\"" << Y(maxy)
           << "\" x2=\"" << X(static_cast<double>(N.start_x())) << "\" y2=\""
           << Y(rat_to_double(N.start_y())) << "\" stroke=\"#c00\" stroke-width=\"2.5\" "
           << "stroke-dasharray=\"6 4\"/>\n";
    // marked points (residual coefficient positions)
    for (const auto& p : marked) {
        if (p.y.is_infinite()) continue;
        os << "<circle cx=\"" << X(static_cast<double>(p.x)) << "\" cy=\""
           << Y(rat_to_double(p.y.finite())) << "\" r=\"4\" fill=\"#06c\"/>\n";
    }
    for (const auto& [x, y] : vs)
        os << "<circle cx=\"" << X(static_cast<double>(x)) << "\" cy=\"" << Y(rat_to_double(y))
           << "\" r=\"4.5\" fill=\"#c00\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string polygon_to_ascii(const PrincipalPolygon& N, const std::vector<PolyPoint>& marked) {
    std::ostringstream os;
    os << "N^-: ";
    if (N.is_point()) {
        os << "point (" << N.start_x() << "," << N.start_y().str() << ")\n";
    } else {
        if (N.inf_length() > 0) os << "[-inf x " << N.inf_length() << "] ";
        auto vs = N.vertices();
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) os << " -> ";
            os << "(" << vs[i].first << "," << vs[i].second.str() << ")";
        }
        os << "\n";
        for (const auto& s : N.sides())
            os << "  side slope " << s.slope().str() << " length " << s.length() << " degree "
               << s.degree() << "\n";
    }
    // character grid, ordinates rounded up to the grid
    long long maxx = N.end_x();
    double maxyd = 0;
    auto vs = N.vertices();
    for (const auto& [x, y] : vs) maxyd = std::max(maxyd, rat_to_double(y));
    for (const auto& p : marked)
        if (!p.y.is_infinite()) maxyd = std::max(maxyd, rat_to_double(p.y.finite()));
    long long maxy = static_cast<long long>(maxyd + 0.999);
    if (maxx <= 0 || maxy <= 0 || maxx > 120 || maxy > 60) return os.str();
    std::vector<std::string> grid(static_cast<size_t>(maxy) + 1,
                                  std::string(static_cast<size_t>(maxx) + 1, ' '));
    auto put = [&](long long x, double y, char ch) {
        long long yy = static_cast<long long>(y + 0.5);
        if (x < 0 || x > maxx || yy < 0 || yy > maxy) return;
        grid[static_cast<size_t>(maxy - yy)][static_cast<size_t>(x)] = ch;
    };
    for (long long x = N.start_x(); x <= maxx; ++x) put(x, rat_to_double(N.y_at(x).finite()), '.');
    for (const auto& p : marked)
        if (!p.y.is_infinite()) put(p.x, rat_to_double(p.y.finite()), 'x');
    for (const auto& [x, y] : vs) put(x, rat_to_double(y), '*');
    for (size_t r = 0; r < grid.size(); ++r) os << std::setw(0) << (maxy - static_cast<long long>(r)) << "|" << grid[r] << "\n";
    os << "  +";
    for (long long x = 0; x <= maxx; ++x) os << '-';
    os << "\n   ";
    for (long long x = 0; x <= maxx; ++x) os << (x % 10);
    os << "\n";
    return os.str();
}

} // namespace omf
