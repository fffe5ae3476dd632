#pragma once

#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hlgf/field.hpp"
#include "hlgf/globe_word.hpp"
#include "random_words.hpp"

namespace hlgf::testing {

inline bool eval_equal(const Evaluation& a, const Evaluation& b, double tol) {
  if (a.index() != b.index()) return false;
  if (const auto* g = std::get_if<GroupElement>(&a)) return dist(*g, std::get<GroupElement>(b)) <= tol;
  if (const auto* l = std::get_if<LoopClass>(&a)) return loop_equal(*l, std::get<LoopClass>(b), tol);
  const auto& x = std::get<TwoGlobe>(a);
  const auto& y = std::get<TwoGlobe>(b);
  return loop_equal(x.source, y.source, tol) && loop_equal(x.target, y.target, tol);
}

// Bitwise equality of the stored numbers; both sides must come from the same arithmetic.
inline bool eval_identical(const Evaluation& a, const Evaluation& b) {
  const auto same_loop = [](const LoopClass& x, const LoopClass& y) {
    if (x.backend() != y.backend()) return false;
    if (x.backend() == Backend::kU1) return x.base() == y.base() && x.lift() == y.lift();
    return x.q0() == y.q0() && x.q1() == y.q1();
  };
  if (a.index() != b.index()) return false;
  if (const auto* g = std::get_if<GroupElement>(&a)) {
    const auto& h = std::get<GroupElement>(b);
    if (g->backend() == Backend::kU1) return g->angle() == h.angle();
    return g->quaternion() == h.quaternion();
  }
  if (const auto* l = std::get_if<LoopClass>(&a)) return same_loop(*l, std::get<LoopClass>(b));
  const auto& x = std::get<TwoGlobe>(a);
  const auto& y = std::get<TwoGlobe>(b);
  return same_loop(x.source, y.source) && same_loop(x.target, y.target);
}

// Composition of evaluations at level j, written out from the loop operations.
inline Evaluation compose_values(const Evaluation& a, const Evaluation& b, int j, double tol) {
  if (const auto* g = std::get_if<GroupElement>(&a)) return mul(*g, std::get<GroupElement>(b));
  if (const auto* l = std::get_if<LoopClass>(&a)) {
    const auto& m = std::get<LoopClass>(b);
    return j == 0 ? loop_compose0(*l, m) : loop_compose1(*l, m, tol);
  }
  const auto& x = std::get<TwoGlobe>(a);
  const auto& y = std::get<TwoGlobe>(b);
  if (j == 0) return TwoGlobe{loop_compose0(x.source, y.source), loop_compose0(x.target, y.target)};
  if (j == 1) {
    return TwoGlobe{loop_compose1(x.source, y.source, tol), loop_compose1(x.target, y.target, tol)};
  }
  return TwoGlobe{y.source, x.target};
}

// The level-l boundary read off an evaluation, using d_l d_m = d_l for l < m.
inline Evaluation boundary_value(const Evaluation& e, int l, Side side, Backend b) {
  const bool minus = side == Side::kMinus;
  if (std::holds_alternative<GroupElement>(e)) return id(b);
  if (const auto* loop = std::get_if<LoopClass>(&e)) {
    if (l == 0) return id(b);
    return minus ? loop->source() : loop->target();
  }
  const auto& t = std::get<TwoGlobe>(e);
  if (l == 0) return id(b);
  if (l == 1) return minus ? t.source.source() : t.source.target();
  return minus ? t.source : t.target;
}

struct LawReport {
  std::map<std::string, int> checked;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  int total() const {
    int n = 0;
    for (const auto& [name, count] : checked) n += count;
    return n;
  }
};

class LawChecker {
 public:
  LawChecker(const HLGF& f, double tol) : f_(f), tol_(tol) {}

  void check(const std::string& law, const GlobeWord& lhs, const GlobeWord& rhs) {
    check_values(law, lhs, evaluate(f_, lhs), evaluate(f_, rhs));
  }

  void check_values(const std::string& law, const GlobeWord& w, const Evaluation& got,
                    const Evaluation& want) {
    ++report_.checked[law];
    if (!eval_equal(got, want, tol_)) report_.failures.push_back(law + " on " + w.to_string());
  }

  // Every relation instance that applies to w, plus those built from a partner of w.
  void run(const GlobeWord& w, WordPool& pool) {
    const int d = w.dim();
    const Backend b = f_.backend();
    const Evaluation value = evaluate(f_, w);
    for (int l = 0; l < d; ++l) {
      check("double inverse", invert(invert(w, l), l), w);
      for (Side side : {Side::kMinus, Side::kPlus}) {
        const GlobeWord fw = face(w, l, side);
        check_values("boundary", fw, evaluate(f_, fw), boundary_value(value, l, side, b));
      }
      const GlobeWord src = face(w, l, Side::kMinus);
      const GlobeWord tgt = face(w, l, Side::kPlus);
      check("right unit", compose(w, degenerate(src, l, d), l), w);
      check("left unit", compose(degenerate(tgt, l, d), w, l), w);
      check("thin inverse", compose(invert(w, l), w, l), degenerate(src, l, d));

      const auto [a, c] = pool.composable_pair(l, d);
      boundary_of_composite(a, c, l);
      for (int k = l + 1; k < d; ++k) interchange(a, c, l, k);
    }
    if (d < f_.complex().dim()) {
      const GlobeWord s = degenerate(w, d, f_.complex().dim());
      check_values("degeneracy value", s, evaluate(f_, s), degenerate_value(value, d, f_.complex().dim()));
      check("degeneracy face", face(s, d, pool.coin() ? Side::kMinus : Side::kPlus), w);
    }
    if (d == 1) {
      const GlobeWord v = face(w, 0, Side::kMinus);
      check("connection square", degenerate(degenerate(v, 0, 1), 1, 2), degenerate(v, 0, 2));
    }
  }

  const LawReport& report() const { return report_; }

 private:
  // Value of s_{from,to} applied to a word with value e.
  Evaluation degenerate_value(const Evaluation& e, int from, int to) const {
    const Backend b = f_.backend();
    if (from == 0 && to == 1) return id(b);
    const LoopClass c = from == 2 ? std::get<LoopClass>(e)
                                  : loop_const(from == 0 ? id(b) : std::get<GroupElement>(e));
    if (to == 2) return c;
    return TwoGlobe{c, c};
  }

  void boundary_of_composite(const GlobeWord& a, const GlobeWord& c, int j) {
    const GlobeWord ac = compose(a, c, j);
    for (int l = 0; l < ac.dim(); ++l) {
      for (Side side : {Side::kMinus, Side::kPlus}) {
        const auto want = [&]() -> Evaluation {
          if (l < j || (l == j && side == Side::kMinus)) return evaluate(f_, face(c, l, side));
          if (l == j) return evaluate(f_, face(a, l, side));
          return compose_values(evaluate(f_, face(a, l, side)), evaluate(f_, face(c, l, side)), j,
                                f_.tolerance());
        }();
        const GlobeWord fw = face(ac, l, side);
        check_values("boundary of composite", fw, evaluate(f_, fw), want);
      }
    }
  }

  // (a o_j c) o_k (a' o_j c') = (a o_k a') o_j (c o_k c') with a' = -_k a, c' = -_k c.
  void interchange(const GlobeWord& a, const GlobeWord& c, int j, int k) {
    const GlobeWord ai = invert(a, k);
    const GlobeWord ci = invert(c, k);
    const GlobeWord lhs = compose(compose(a, c, j), compose(ai, ci, j), k);
    const GlobeWord rhs = compose(compose(a, ai, k), compose(c, ci, k), j);
    check("interchange", lhs, rhs);
  }

  const HLGF& f_;
  double tol_;
  LawReport report_;
};

}  // namespace hlgf::testing
