#include "dapg/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dapg {

namespace {

std::string point_str(const Point& a) {
    return "(" + std::to_string(a.m) + "," + std::to_string(a.b) + ")";
}

}  // namespace

Point Geometry::point_on_line(const Line& j, int b) const {
    if (b < -1 || b >= dim_.d) {
        throw std::out_of_range("point_on_line: column b = " + std::to_string(b) +
                                " outside [-1, " + std::to_string(dim_.d) + ")");
    }
    if (b == -1) return Point{j.m_minus1, -1};
    const int c = dim_.reduce(2LL * j.m_minus1);
    const int m = dim_.reduce(static_cast<long long>(half(b, dim_)) * (c - 1) + j.m0);
    return Point{m, b};
}

int Geometry::incidence(const Point& alpha, const Line& j) const {
    if (alpha.b < -1 || alpha.b >= dim_.d || alpha.m < 0 || alpha.m >= dim_.d) return 0;
    return point_on_line(j, alpha.b).m == alpha.m ? 1 : 0;
}

std::vector<Point> Geometry::points_on_line(const Line& j) const {
    std::vector<Point> pts;
    pts.reserve(dim_.d + 1);
    for (int b = -1; b < dim_.d; ++b) pts.push_back(point_on_line(j, b));
    return pts;
}

std::vector<Line> Geometry::lines_through_point(const Point& alpha) const {
    if (alpha.b < -1 || alpha.b >= dim_.d || alpha.m < 0 || alpha.m >= dim_.d) {
        throw std::out_of_range("lines_through_point: point " + point_str(alpha) +
                                " outside the d x (d+1) grid");
    }
    std::vector<Line> lines;
    lines.reserve(dim_.d);
    if (alpha.b == -1) {
        for (int m0 = 0; m0 < dim_.d; ++m0) lines.push_back(Line{alpha.m, m0});
        return lines;
    }
    // solve m(b) = (b/2)(c-1) + m0 for m0, one line per m(-1) value
    for (int mm1 = 0; mm1 < dim_.d; ++mm1) {
        const int c = dim_.reduce(2LL * mm1);
        const int m0 =
            dim_.reduce(alpha.m - static_cast<long long>(half(alpha.b, dim_)) * (c - 1));
        lines.push_back(Line{mm1, m0});
    }
    return lines;
}

LineTable make_line_table(const Geometry& g) {
    LineTable table(g.num_lines());
    for (int idx = 0; idx < g.num_lines(); ++idx) {
        table[idx] = g.points_on_line(g.line_at(idx));
    }
    return table;
}

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AxiomReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.pass) return &c;
    }
    return nullptr;
}

namespace {

// number of shared entries between two sorted index vectors
int shared_count(const std::vector<int>& a, const std::vector<int>& b) {
    int n = 0;
    size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
        if (a[i] < b[k]) {
            ++i;
        } else if (a[i] > b[k]) {
            ++k;
        } else {
            ++n;
            ++i;
            ++k;
        }
    }
    return n;
}

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

AxiomReport verify_dapg_axioms(const Geometry& g) {
    return verify_dapg_axioms(g, make_line_table(g));
}

AxiomReport verify_dapg_axioms(const Geometry& g, const LineTable& lines) {
    const int d = g.d();
    const long long nlines = static_cast<long long>(lines.size());
    const int npoints = g.num_points();
    AxiomReport report;
    report.d = d;

    // (a) counts and coordinate ranges
    AxiomCheck a{"axiom_a_counts", true, 0, ""};
    if (nlines != static_cast<long long>(g.num_lines())) {
        a.pass = false;
        a.violations = 1;
        a.witness = "expected " + std::to_string(g.num_lines()) + " lines, table holds " +
                    std::to_string(nlines);
    }
    bool coords_ok = true;
    for (size_t j = 0; j < lines.size() && a.pass; ++j) {
        for (const Point& p : lines[j]) {
            if (p.m < 0 || p.m >= d || p.b < -1 || p.b >= d) {
                a.pass = false;
                a.violations = 1;
                a.witness = "line " + std::to_string(j) + " holds out-of-grid point " +
                            point_str(p);
                coords_ok = false;
                break;
            }
        }
    }
    report.checks.push_back(a);
    if (!coords_ok) {
        for (const char* name : {"axiom_b_unique_intersection", "axiom_c_regularity",
                                 "axiom_d_column_partition", "axiom_e_connectivity"}) {
            report.checks.push_back(
                {name, false, 0, "not evaluated: invalid point coordinates"});
        }
        return report;
    }

    // sorted point-index sets per line, and point -> incident lines
    std::vector<std::vector<int>> line_pts(lines.size());
    std::vector<std::vector<int>> point_lines(npoints);
    for (size_t j = 0; j < lines.size(); ++j) {
        line_pts[j].reserve(lines[j].size());
        for (const Point& p : lines[j]) line_pts[j].push_back(g.point_index(p));
        std::sort(line_pts[j].begin(), line_pts[j].end());
        for (int pi : line_pts[j]) point_lines[pi].push_back(static_cast<int>(j));
    }

    // (b) part 1: two distinct lines share exactly one point
    AxiomCheck b{"axiom_b_unique_intersection", true, 0, ""};
    const long long npairs = nlines * (nlines - 1) / 2;
    long long pair_violations = 0;
#pragma omp parallel for reduction(+ : pair_violations) schedule(static) \
    if (npairs > 4096)
    for (long long j1 = 0; j1 < nlines; ++j1) {
        for (long long j2 = j1 + 1; j2 < nlines; ++j2) {
            if (shared_count(line_pts[j1], line_pts[j2]) != 1) ++pair_violations;
        }
    }
    if (pair_violations > 0) {
        b.pass = false;
        b.violations = pair_violations;
        for (long long j1 = 0; j1 < nlines && b.witness.empty(); ++j1) {
            for (long long j2 = j1 + 1; j2 < nlines; ++j2) {
                const int s = shared_count(line_pts[j1], line_pts[j2]);
                if (s != 1) {
                    b.witness = "lines " + std::to_string(j1) + " and " +
                                std::to_string(j2) + " share " + std::to_string(s) +
                                " points";
                    break;
                }
            }
        }
    }

    // (b) part 2 and (e): lines through each cross-column point pair
    long long cross_not_one = 0, cross_zero = 0;
#pragma omp parallel for reduction(+ : cross_not_one, cross_zero) schedule(dynamic) \
    if (npoints > 64)
    for (int p1 = 0; p1 < npoints; ++p1) {
        for (int p2 = p1 + 1; p2 < npoints; ++p2) {
            if (p1 / d == p2 / d) continue;  // same column
            int n = 0;
            for (int j : point_lines[p1]) {
                if (contains(line_pts[j], p2)) ++n;
            }
            if (n != 1) ++cross_not_one;
            if (n == 0) ++cross_zero;
        }
    }
    auto cross_witness = [&](bool want_zero) {
        for (int p1 = 0; p1 < npoints; ++p1) {
            for (int p2 = p1 + 1; p2 < npoints; ++p2) {
                if (p1 / d == p2 / d) continue;
                int n = 0;
                for (int j : point_lines[p1]) {
                    if (contains(line_pts[j], p2)) ++n;
                }
                if ((want_zero && n == 0) || (!want_zero && n != 1)) {
                    return "points " + point_str(g.point_at(p1)) + " and " +
                           point_str(g.point_at(p2)) + " lie on " + std::to_string(n) +
                           " common lines";
                }
            }
        }
        return std::string{};
    };
    if (cross_not_one > 0 && b.pass) {
        b.pass = false;
        b.violations = cross_not_one;
        b.witness = cross_witness(false);
    }
    report.checks.push_back(b);

    // (c) d lines per point, d+1 points per line
    AxiomCheck c{"axiom_c_regularity", true, 0, ""};
    for (int pi = 0; pi < npoints; ++pi) {
        if (static_cast<int>(point_lines[pi].size()) != d) {
            ++c.violations;
            if (c.witness.empty()) {
                c.witness = "point " + point_str(g.point_at(pi)) + " lies on " +
                            std::to_string(point_lines[pi].size()) + " lines";
            }
        }
    }
    for (size_t j = 0; j < lines.size(); ++j) {
        if (static_cast<int>(lines[j].size()) != d + 1) {
            ++c.violations;
            if (c.witness.empty()) {
                c.witness = "line " + std::to_string(j) + " holds " +
                            std::to_string(lines[j].size()) + " points";
            }
        }
    }
    c.pass = c.violations == 0;
    report.checks.push_back(c);

    // (d) no line meets a column twice
    AxiomCheck dd{"axiom_d_column_partition", true, 0, ""};
    for (size_t j = 0; j < lines.size(); ++j) {
        std::vector<int> seen(d + 1, 0);
        for (const Point& p : lines[j]) {
            if (++seen[p.b + 1] == 2) {
                ++dd.violations;
                if (dd.witness.empty()) {
                    dd.witness = "line " + std::to_string(j) +
                                 " meets column b = " + std::to_string(p.b) + " twice";
                }
            }
        }
    }
    dd.pass = dd.violations == 0;
    report.checks.push_back(dd);

    // (e) every cross-column point pair is collinear
    AxiomCheck e{"axiom_e_connectivity", true, 0, ""};
    if (cross_zero > 0) {
        e.pass = false;
        e.violations = cross_zero;
        e.witness = cross_witness(true);
    }
    report.checks.push_back(e);

    return report;
}

}  // namespace dapg
