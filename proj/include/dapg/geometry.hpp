#pragma once

#include "dapg/prime_field.hpp"

#include <string>
#include <vector>

namespace dapg {

// A point alpha = (m, b) on the d x (d+1) grid. Column b = -1 is the
// computational basis; b = 0..d-1 label the remaining bases.
struct Point {
    int m = 0;
    int b = -1;
    friend bool operator==(const Point&, const Point&) = default;
};

// A line j = (m(-1), m(0)): its rows in columns -1 and 0. The row in every
// other column follows from the incidence rule, so these two values label
// the line completely.
struct Line {
    int m_minus1 = 0;
    int m0 = 0;
    friend bool operator==(const Line&, const Line&) = default;
};

// The dual affine plane of order d: d(d+1) points arranged in d+1 columns of
// d rows, and d^2 lines holding one point per column. The slope parameter
// c = 2*m(-1) mod d is always recomputed, never stored.
//
// Canonical enumerations (fixed so file output and tests are deterministic):
//   line index  = m_minus1 * d + m0        (row-major over the two labels)
//   point index = (b + 1) * d + m          (column-major, b = -1 first)
class Geometry {
public:
    explicit Geometry(PrimeDim dim) : dim_(std::move(dim)) {}

    const PrimeDim& dim() const { return dim_; }
    int d() const { return dim_.d; }
    int num_points() const { return dim_.d * (dim_.d + 1); }
    int num_lines() const { return dim_.d * dim_.d; }

    int line_index(const Line& j) const { return j.m_minus1 * dim_.d + j.m0; }
    Line line_at(int index) const { return Line{index / dim_.d, index % dim_.d}; }
    int point_index(const Point& a) const { return (a.b + 1) * dim_.d + a.m; }
    Point point_at(int index) const { return Point{index % dim_.d, index / dim_.d - 1}; }

    // The unique point of line j in column b:
    //   m(-1) = m_minus1,  m(b) = (b/2)(c - 1) + m(0) mod d  with c = 2*m(-1).
    // Throws std::out_of_range unless -1 <= b < d.
    Point point_on_line(const Line& j, int b) const;

    // 1 iff alpha lies on j (0 for any alpha outside the grid).
    int incidence(const Point& alpha, const Line& j) const;

    // The d+1 points of j, columns b = -1..d-1 in order.
    std::vector<Point> points_on_line(const Line& j) const;

    // The d lines through alpha, in canonical line order.
    std::vector<Line> lines_through_point(const Point& alpha) const;

private:
    PrimeDim dim_;
};

// Explicit line -> points table indexed by canonical line index. Axiom
// verification runs against a table, which lets tests feed perturbed copies.
using LineTable = std::vector<std::vector<Point>>;

LineTable make_line_table(const Geometry& g);

struct AxiomCheck {
    std::string name;       // "axiom_a_counts" .. "axiom_e_connectivity"
    bool pass = false;
    long long violations = 0;
    std::string witness;    // first violating configuration; empty when pass
};

struct AxiomReport {
    int d = 0;
    std::vector<AxiomCheck> checks;

    bool all_pass() const;
    const AxiomCheck* first_failure() const;
};

// Checks the dual-affine-plane axioms on the canonical lines:
//   (a) d^2 lines, d(d+1) points
//   (b) two distinct lines share exactly one point; two points in distinct
//       columns lie on exactly one common line
//   (c) d lines per point, d+1 points per line
//   (d) no line meets a column twice (columns are d+1 disjoint sets of d
//       mutually non-collinear points)
//   (e) every point is collinear with every point outside its column
AxiomReport verify_dapg_axioms(const Geometry& g);
AxiomReport verify_dapg_axioms(const Geometry& g, const LineTable& lines);

}  // namespace dapg
