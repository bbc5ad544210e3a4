#include "csest/min_kgon.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "csest/errors.hpp"

namespace csest::kgon {

using geom2d::ConvexPolygon;
using geom2d::Point2;

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::exact_hull:
      return "exact_hull";
    case SolveStatus::dp_optimal:
      return "dp_optimal";
    case SolveStatus::refined_heuristic:
      return "refined_heuristic";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Consecutive support lines must turn by an angle in (margin, pi - margin).
constexpr double kTurnMargin = 1e-9;
constexpr int kBrentBits = 40;

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// A support line of the hull: direction angle `theta` (unwrapped), touching the
// hull at vertices in..out (unwrapped indices; in == out for a free tangent,
// out == in + 1 for a line flush with edge `in`).
struct Line {
  double theta;
  long in;
  long out;
};

struct Tangent {
  double cost = kInf;
  Line line{};
};

struct Candidate {
  double area;
  std::vector<Line> lines;
};

// Hull expressed in centroid coordinates with cumulative cap areas.
class Frame {
 public:
  explicit Frame(const ConvexPolygon& hull)
      : origin_(geom2d::centroid(hull)), m_(static_cast<long>(hull.size())) {
    for (const auto& p : hull.vertices()) v_.push_back(p - origin_);
    alpha_.resize(static_cast<std::size_t>(m_));
    for (long i = 0; i < m_; ++i) {
      const Point2 d = vtx(i + 1) - vtx(i);
      double a = std::atan2(d.y, d.x);
      if (i > 0) {
        while (a <= alpha_[static_cast<std::size_t>(i - 1)]) a += kTwoPi;
      }
      alpha_[static_cast<std::size_t>(i)] = a;
    }
    prefix_.assign(static_cast<std::size_t>(2 * m_ + 1), 0.0);
    for (long k = 0; k < 2 * m_; ++k) {
      prefix_[static_cast<std::size_t>(k + 1)] =
          prefix_[static_cast<std::size_t>(k)] + geom2d::cross(vtx(k), vtx(k + 1));
    }
    hull_area_ = geom2d::area(hull);
  }

  long m() const { return m_; }
  double hull_area() const { return hull_area_; }
  Point2 origin() const { return origin_; }

  Point2 vtx(long i) const {
    return v_[static_cast<std::size_t>(i - floor_div(i, m_) * m_)];
  }

  double alpha(long i) const {
    const long q = floor_div(i, m_);
    return alpha_[static_cast<std::size_t>(i - q * m_)] + kTwoPi * static_cast<double>(q);
  }

  Line flush(long edge) const { return {alpha(edge), edge, edge + 1}; }

  static Line shift(const Line& l, long turns, long m) {
    return {l.theta + kTwoPi * static_cast<double>(turns), l.in + turns * m, l.out + turns * m};
  }

  Point2 intersection(const Line& l1, const Line& l2) const {
    const Point2 p1 = vtx(l1.out);
    const Point2 p2 = vtx(l2.in);
    const Point2 d1{std::cos(l1.theta), std::sin(l1.theta)};
    const Point2 d2{std::cos(l2.theta), std::sin(l2.theta)};
    const double s = geom2d::cross(p2 - p1, d2) / geom2d::cross(d1, d2);
    return p1 + s * d1;
  }

  // Area of the chain polygon v_a, ..., v_b closed by the chord (a <= b).
  double cap(long a, long b) const {
    if (b - a < 2) return 0.0;
    const long q = floor_div(a, m_);
    const long a0 = a - q * m_;
    const long b0 = b - q * m_;
    return 0.5 * (prefix_[static_cast<std::size_t>(b0)] - prefix_[static_cast<std::size_t>(a0)] +
                  geom2d::cross(vtx(b0), vtx(a0)));
  }

  // Area between two consecutive support lines and the hull boundary.
  double corner(const Line& l1, const Line& l2) const {
    const double turn = l2.theta - l1.theta;
    if (!(turn > kTurnMargin && turn < kPi - kTurnMargin)) return kInf;
    const long a = l1.out;
    const long b = l2.in;
    if (b < a || b - a > m_) return kInf;
    if (a == b) return 0.0;
    const Point2 x = intersection(l1, l2);
    const Point2 va = vtx(a);
    const double tri = 0.5 * geom2d::cross(x - va, vtx(b) - va);
    return std::max(0.0, tri - cap(a, b));
  }

  // Best single support line between `l1` and `l2`, over every touching vertex.
  Tangent best_tangent(const Line& l1, const Line& l2) const {
    Tangent best;
    for (long v = l1.out; v <= l2.in; ++v) {
      const double lo = std::max({alpha(v - 1), l1.theta + 2.0 * kTurnMargin,
                                  l2.theta - kPi + 2.0 * kTurnMargin});
      const double hi = std::min({alpha(v), l1.theta + kPi - 2.0 * kTurnMargin,
                                  l2.theta - 2.0 * kTurnMargin});
      if (!(lo <= hi)) continue;
      auto cost = [&](double th) {
        const Line t{th, v, v};
        return corner(l1, t) + corner(t, l2);
      };
      auto consider = [&](double th, double c) {
        if (c < best.cost) best = {c, Line{th, v, v}};
      };
      consider(lo, cost(lo));
      if (hi > lo) {
        std::uintmax_t iters = 200;
        const auto [th, c] = boost::math::tools::brent_find_minima(cost, lo, hi, kBrentBits, iters);
        consider(th, c);
        consider(hi, cost(hi));
      }
    }
    // Tangents at a cone boundary run flush with the adjacent edge.
    if (best.cost < kInf) {
      Line& t = best.line;
      if (t.theta == alpha(t.in)) {
        t.out = t.in + 1;
      } else if (t.theta == alpha(t.in - 1)) {
        t.in -= 1;
      }
    }
    return best;
  }

  double total_area(const std::vector<Line>& lines) const {
    double total = hull_area_;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Line next = i + 1 < lines.size() ? lines[i + 1] : shift(lines[0], 1, m_);
      total += corner(lines[i], next);
    }
    return total;
  }

  std::optional<ConvexPolygon> polygon(const std::vector<Line>& lines) const {
    std::vector<Point2> pts;
    pts.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Line next = i + 1 < lines.size() ? lines[i + 1] : shift(lines[0], 1, m_);
      if (lines[i].out == next.in && std::abs(next.theta - lines[i].theta) > 0.0) {
        pts.push_back(vtx(next.in) + origin_);
      } else {
        pts.push_back(geom2d::Point2{} + origin_ + intersection(lines[i], next));
      }
    }
    try {
      return geom2d::convex_hull(pts);
    } catch (const DegenerateInput&) {
      return std::nullopt;
    }
  }

 private:
  Point2 origin_;
  long m_;
  std::vector<Point2> v_;
  std::vector<double> alpha_;
  std::vector<double> prefix_;
  double hull_area_ = 0.0;
};

// Flush-line dynamic program, one pass per start edge, all counts up to k_max.
// Returns cand[k][s] = best cycle with exactly k lines starting flush at edge s.
std::vector<std::vector<std::optional<Candidate>>> run_dp(const Frame& f, int k_max) {
  const long m = f.m();
  const auto mm = static_cast<std::size_t>(m);
  std::vector<double> flush_cost(mm * mm, kInf);
  std::vector<Tangent> free_cost(mm * mm);
  for (long i = 0; i < m; ++i) {
    for (long g = 1; g < m; ++g) {
      const std::size_t idx = static_cast<std::size_t>(i) * mm + static_cast<std::size_t>(g);
      const Line a = f.flush(i);
      const Line b = f.flush(i + g);
      const double turn = b.theta - a.theta;
      if (turn < kPi - kTurnMargin) {
        flush_cost[idx] = f.corner(a, b);
      } else {
        free_cost[idx] = f.best_tangent(a, b);
      }
    }
  }

  const auto kk = static_cast<std::size_t>(k_max);
  std::vector<std::vector<std::optional<Candidate>>> cand(
      kk + 1, std::vector<std::optional<Candidate>>(mm));

  struct Parent {
    long from = -1;
    int lines = 0;
    bool free = false;
  };
  const std::size_t stride = mm + 1;
  std::vector<double> dp((kk + 1) * stride);
  std::vector<Parent> parent((kk + 1) * stride);

  for (long s = 0; s < m; ++s) {
    std::fill(dp.begin(), dp.end(), kInf);
    std::fill(parent.begin(), parent.end(), Parent{});
    dp[1 * stride + 0] = 0.0;
    for (long o = 0; o < m; ++o) {
      const long i = (s + o) % m;
      for (int c = 1; c <= k_max; ++c) {
        const double base = dp[static_cast<std::size_t>(c) * stride + static_cast<std::size_t>(o)];
        if (base == kInf) continue;
        for (long o2 = o + 1; o2 <= m; ++o2) {
          const long g = o2 - o;
          if (g >= m) continue;
          const std::size_t idx = static_cast<std::size_t>(i) * mm + static_cast<std::size_t>(g);
          const int closing = o2 == m ? 0 : 1;
          const double fc = flush_cost[idx];
          if (fc < kInf && c + closing <= k_max) {
            const std::size_t at =
                static_cast<std::size_t>(c + closing) * stride + static_cast<std::size_t>(o2);
            if (base + fc < dp[at]) {
              dp[at] = base + fc;
              parent[at] = {o, c, false};
            }
          }
          const double qc = free_cost[idx].cost;
          if (qc < kInf && c + 1 + closing <= k_max) {
            const std::size_t at =
                static_cast<std::size_t>(c + 1 + closing) * stride + static_cast<std::size_t>(o2);
            if (base + qc < dp[at]) {
              dp[at] = base + qc;
              parent[at] = {o, c, true};
            }
          }
        }
      }
    }
    for (int k = 3; k <= k_max; ++k) {
      const std::size_t at = static_cast<std::size_t>(k) * stride + mm;
      if (dp[at] == kInf) continue;
      // Walk parents back to the start and emit lines in increasing order.
      std::vector<std::pair<long, bool>> steps;  // (edge offset reached, via free tangent)
      long o = m;
      int c = k;
      while (!(o == 0 && c == 1)) {
        const Parent p = parent[static_cast<std::size_t>(c) * stride + static_cast<std::size_t>(o)];
        steps.emplace_back(o, p.free);
        o = p.from;
        c = p.lines;
      }
      std::reverse(steps.begin(), steps.end());
      std::vector<Line> lines{f.flush(s)};
      long prev = 0;
      for (const auto& [reached, via_free] : steps) {
        if (via_free) {
          const long i = (s + prev) % m;
          const std::size_t idx =
              static_cast<std::size_t>(i) * mm + static_cast<std::size_t>(reached - prev);
          Line t = free_cost[idx].line;
          const long shift_turns = floor_div(s + prev, m);
          lines.push_back(Frame::shift(t, shift_turns, m));
        }
        if (reached != m) lines.push_back(f.flush(s + reached));
        prev = reached;
      }
      cand[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] =
          Candidate{f.hull_area() + dp[at], std::move(lines)};
    }
  }
  return cand;
}

// Removes hull edges one at a time, extending neighbours, cheapest first.
std::optional<std::vector<Line>> greedy_extension(const Frame& f, int k) {
  std::vector<Line> lines;
  for (long i = 0; i < f.m(); ++i) lines.push_back(f.flush(i));
  while (static_cast<int>(lines.size()) > k) {
    const std::size_t n = lines.size();
    double best = kInf;
    std::size_t best_j = n;
    for (std::size_t j = 0; j < n; ++j) {
      const Line prev = j == 0 ? Frame::shift(lines[n - 1], -1, f.m()) : lines[j - 1];
      const Line next = j + 1 == n ? Frame::shift(lines[0], 1, f.m()) : lines[j + 1];
      const double joined = f.corner(prev, next);
      if (joined == kInf) continue;
      const double delta = joined - f.corner(prev, lines[j]) - f.corner(lines[j], next);
      if (delta < best) {
        best = delta;
        best_j = j;
      }
    }
    if (best_j == n) return std::nullopt;
    lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(best_j));
  }
  return lines;
}

double polish(const Frame& f, std::vector<Line>& lines, int max_sweeps) {
  const std::size_t n = lines.size();
  double area = f.total_area(lines);
  const double tol = 1e-14 * std::max(1.0, f.hull_area());
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Line prev = i == 0 ? Frame::shift(lines[n - 1], -1, f.m()) : lines[i - 1];
      const Line next = i + 1 == n ? Frame::shift(lines[0], 1, f.m()) : lines[i + 1];
      const double current = f.corner(prev, lines[i]) + f.corner(lines[i], next);
      const Tangent t = f.best_tangent(prev, next);
      if (t.cost < current - tol) {
        lines[i] = t.line;
        improved = true;
      }
    }
    const double updated = f.total_area(lines);
    if (!improved || !(updated < area - tol)) {
      area = std::min(area, updated);
      break;
    }
    area = updated;
  }
  return area;
}

bool encloses(const ConvexPolygon& poly, const ConvexPolygon& hull) {
  const double scale = std::max(1.0, geom2d::norm(hull[0]));
  for (const auto& v : hull.vertices()) {
    if (!geom2d::contains(poly, v, geom2d::kContainTol * scale)) return false;
  }
  return true;
}

}  // namespace

EnclosingPolygonSolver::EnclosingPolygonSolver(const ConvexPolygon& hull, SolverOptions opts)
    : hull_(hull), opts_(opts) {}

std::size_t EnclosingPolygonSolver::hull_size() const { return hull_.size(); }

KgonSolution EnclosingPolygonSolver::solve(int k) const { return solve_upto(k).back(); }

std::vector<KgonSolution> EnclosingPolygonSolver::solve_upto(int k_max) const {
  if (k_max < 3) {
    throw InvalidParameters("enclosing polygon needs at least 3 vertices, got " +
                            std::to_string(k_max));
  }
  const int m = static_cast<int>(hull_.size());
  const double hull_area = geom2d::area(hull_);
  std::vector<KgonSolution> out;
  out.reserve(static_cast<std::size_t>(k_max - 2));

  const int dp_max = std::min(k_max, m - 1);
  if (dp_max >= 3) {
    const Frame frame(hull_);
    const auto cand = run_dp(frame, dp_max);
    const bool polish_all = m <= opts_.polish_all_below;

    std::vector<const Candidate*> pool;
    std::optional<KgonSolution> previous;
    for (int k = 3; k <= dp_max; ++k) {
      for (const auto& c : cand[static_cast<std::size_t>(k)]) {
        if (c) pool.push_back(&*c);
      }
      std::vector<const Candidate*> ranked = pool;
      std::stable_sort(ranked.begin(), ranked.end(),
                       [](const Candidate* a, const Candidate* b) { return a->area < b->area; });
      const double dp_best = ranked.empty() ? kInf : ranked.front()->area;

      std::vector<std::vector<Line>> starts;
      double last_area = -1.0;
      for (const Candidate* c : ranked) {
        if (!polish_all && static_cast<int>(starts.size()) >= opts_.polish_candidates) break;
        if (last_area >= 0.0 && c->area - last_area <= 1e-12 * std::max(1.0, last_area)) continue;
        last_area = c->area;
        starts.push_back(c->lines);
      }
      if (auto g = greedy_extension(frame, k)) starts.push_back(std::move(*g));

      std::optional<KgonSolution> best = previous;
      for (auto& lines : starts) {
        polish(frame, lines, opts_.max_polish_sweeps);
        auto poly = frame.polygon(lines);
        if (!poly || !encloses(*poly, hull_)) continue;
        const double a = geom2d::area(*poly);
        if (!best || a < best->area) best = KgonSolution{std::move(*poly), a, SolveStatus::dp_optimal, dp_best};
      }
      if (!best) {
        throw DegenerateInput("no feasible enclosing " + std::to_string(k) + "-gon found");
      }
      best->dp_area = std::min(dp_best, best->dp_area);
      best->status = best->area < best->dp_area * (1.0 - 1e-12) ? SolveStatus::refined_heuristic
                                                                 : SolveStatus::dp_optimal;
      previous = best;
      out.push_back(*best);
    }
  }
  for (int k = std::max(3, dp_max + 1); k <= k_max; ++k) {
    out.push_back(KgonSolution{hull_, hull_area, SolveStatus::exact_hull, hull_area});
  }
  return out;
}

}  // namespace csest::kgon
