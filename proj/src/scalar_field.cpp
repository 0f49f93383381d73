#include "symmlab/scalar_field.hpp"

#include <algorithm>
#include <cmath>

namespace symmlab {

namespace {

class ConstField final : public ScalarField {
public:
  explicit ConstField(double c) : c_(c) {}
  double eval(double, double) const override { return c_; }
  double d1(double, double) const override { return 0.0; }
  double d2(double, double) const override { return 0.0; }
  std::unique_ptr<ScalarField> clone() const override {
    return std::make_unique<ConstField>(c_);
  }
  FieldDescription describe() const override { return {"const", {c_}, {}, {}}; }

private:
  double c_;
};

class LinearField final : public ScalarField {
public:
  LinearField(double a0, double a1, double a2) : a0_(a0), a1_(a1), a2_(a2) {}
  double eval(double a, double b) const override { return a0_ + a1_ * a + a2_ * b; }
  double d1(double, double) const override { return a1_; }
  double d2(double, double) const override { return a2_; }
  std::unique_ptr<ScalarField> clone() const override {
    return std::make_unique<LinearField>(a0_, a1_, a2_);
  }
  FieldDescription describe() const override {
    return {"linear", {a0_, a1_, a2_}, {}, {}};
  }

private:
  double a0_, a1_, a2_;
};

class SinRField final : public ScalarField {
public:
  SinRField(double a, double b, double w) : a_(a), b_(b), w_(w) {}
  double eval(double r, double) const override { return a_ + b_ * std::sin(w_ * r); }
  double d1(double r, double) const override { return b_ * w_ * std::cos(w_ * r); }
  double d2(double, double) const override { return 0.0; }
  std::unique_ptr<ScalarField> clone() const override {
    return std::make_unique<SinRField>(a_, b_, w_);
  }
  FieldDescription describe() const override {
    return {"sin_r", {a_, b_, w_}, {}, {}};
  }

private:
  double a_, b_, w_;
};

// Panels of one axis: node coordinates split by wall positions.
struct AxisPanels {
  std::vector<double> edges;            // P+1 panel edges incl. domain ends
  std::vector<int> first_node;          // per panel
  std::vector<int> node_count;          // per panel

  // side < 0 resolves a coordinate exactly on a wall to the left panel.
  int locate(double x, int side) const {
    const int P = static_cast<int>(first_node.size());
    for (int p = 0; p < P; ++p) {
      const double lo = edges[p], hi = edges[p + 1];
      const bool in = side < 0 ? (x > lo && x <= hi) : (x >= lo && x < hi);
      if (in) return p;
    }
    return x <= edges.front() ? 0 : P - 1;
  }
};

AxisPanels build_panels(double lo, double hi, int n, double h,
                        const std::vector<double>& walls) {
  AxisPanels ax;
  ax.edges.push_back(lo);
  std::vector<double> ws = walls;
  std::sort(ws.begin(), ws.end());
  for (double w : ws)
    if (w > lo + 1e-14 && w < hi - 1e-14) ax.edges.push_back(w);
  ax.edges.push_back(hi);
  int next = 0;
  for (size_t p = 0; p + 1 < ax.edges.size(); ++p) {
    int first = next, count = 0;
    while (next < n && lo + (next + 0.5) * h < ax.edges[p + 1]) {
      ++count;
      ++next;
    }
    SYMMLAB_REQUIRE(count > 0, "interpolant panel contains no grid nodes");
    ax.first_node.push_back(first);
    ax.node_count.push_back(count);
  }
  return ax;
}

class GridInterpolant final : public ScalarField {
public:
  GridInterpolant(GridFunction f, std::vector<JumpWall> walls)
      : f_(std::move(f)), walls_(std::move(walls)) {
    std::vector<double> w1, w2;
    for (const JumpWall& w : walls_)
      (w.axis == 0 ? w1 : w2).push_back(w.pos);
    ax1_ = build_panels(f_.dom.lo1, f_.dom.hi1, f_.dom.n1, f_.dom.h1(), w1);
    if (f_.dom.has_axis2)
      ax2_ = build_panels(f_.dom.lo2, f_.dom.hi2, f_.dom.n2, f_.dom.h2(), w2);
  }

  double eval(double a, double b) const override { return query(a, b).val; }
  double d1(double a, double b) const override { return query(a, b).da; }
  double d2(double a, double b) const override { return query(a, b).db; }

  std::unique_ptr<ScalarField> clone() const override {
    return std::make_unique<GridInterpolant>(f_, walls_);
  }

  double eval_side(double a, double b, int side1, int side2) const override {
    return query(a, b, side1, side2).val;
  }

  FieldDescription describe() const override {
    return {"grid", {}, f_, walls_};
  }

private:
  struct Sample {
    double val, da, db;
  };

  // Linear interpolation along axis 1 within panel p1 at row j.
  // Returns value and slope.
  void row_interp(int p1, double a, int j, double& val, double& slope) const {
    const int first = ax1_.first_node[p1];
    const int count = ax1_.node_count[p1];
    const double h = f_.dom.h1();
    if (count == 1) {
      val = f_.at(first, j);
      slope = 0.0;
      return;
    }
    int i0 = static_cast<int>(std::floor((a - f_.dom.center1(first)) / h));
    i0 = std::clamp(i0, 0, count - 2);
    const double t0 = f_.dom.center1(first + i0);
    const double f0 = f_.at(first + i0, j), f1 = f_.at(first + i0 + 1, j);
    slope = (f1 - f0) / h;
    val = f0 + slope * (a - t0);
  }

  Sample query(double a, double b, int side1 = +1, int side2 = +1) const {
    const int p1 = ax1_.locate(a, side1);
    Sample s{};
    if (!f_.dom.has_axis2) {
      row_interp(p1, a, 0, s.val, s.da);
      s.db = 0.0;
      return s;
    }
    const int p2 = ax2_.locate(b, side2);
    const int jfirst = ax2_.first_node[p2];
    const int jcount = ax2_.node_count[p2];
    if (jcount == 1) {
      row_interp(p1, a, jfirst, s.val, s.da);
      s.db = 0.0;
      return s;
    }
    const double h2 = f_.dom.h2();
    int j0 = static_cast<int>(std::floor((b - f_.dom.center2(jfirst)) / h2));
    j0 = std::clamp(j0, 0, jcount - 2);
    double v0, g0, v1, g1;
    row_interp(p1, a, jfirst + j0, v0, g0);
    row_interp(p1, a, jfirst + j0 + 1, v1, g1);
    const double w = (b - f_.dom.center2(jfirst + j0)) / h2;
    s.val = (1.0 - w) * v0 + w * v1;
    s.da = (1.0 - w) * g0 + w * g1;
    s.db = (v1 - v0) / h2;
    return s;
  }

  GridFunction f_;
  std::vector<JumpWall> walls_;
  AxisPanels ax1_, ax2_;
};

}  // namespace

std::unique_ptr<ScalarField> make_const_field(double c) {
  return std::make_unique<ConstField>(c);
}
std::unique_ptr<ScalarField> make_linear_field(double a0, double a1, double a2) {
  return std::make_unique<LinearField>(a0, a1, a2);
}
std::unique_ptr<ScalarField> make_sin_r_field(double a, double b, double w) {
  return std::make_unique<SinRField>(a, b, w);
}
std::unique_ptr<ScalarField> make_grid_interpolant(GridFunction f,
                                                   std::vector<JumpWall> walls) {
  return std::make_unique<GridInterpolant>(std::move(f), std::move(walls));
}

}  // namespace symmlab
