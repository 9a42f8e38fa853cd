#pragma once

// Rewriting system for an embedded decomposed curve c = a1 u a2 u a3 on a
// genus-one trisection surface with [alpha] = [mu]. The word w_i records
// the letters met along a_i; t3 counts twists of a1 around b3 and t1 twists
// of a2 around b1. Sliding arcs over the punctures b_i and a1 over alpha
// clears every mu (reduce_mu), after which a2 is unwound over beta
// (reduce_full), leaving m twists at b3 and n - 1 at b1.

#include "trisect/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trisect {

inline constexpr char kMu = 'm';
inline constexpr char kLambda = 'l';

struct SlideState {
  std::string w1, w2, w3; ///< letters kMu / kLambda
  std::int64_t t3 = 0;
  std::int64_t t1 = 0;
  std::int64_t m = 0, n = 0; ///< target class m*mu + n*lambda

  friend auto operator==(const SlideState &, const SlideState &) -> bool = default;

  [[nodiscard]] auto count(char letter) const -> std::int64_t {
    return std::count(w1.begin(), w1.end(), letter) + std::count(w2.begin(), w2.end(), letter) +
           std::count(w3.begin(), w3.end(), letter);
  }
  /// #mu + t3 = m, preserved by every move.
  [[nodiscard]] auto mu_balanced() const -> bool { return count(kMu) + t3 == m; }
  /// #lambda = n and t1 = 0, preserved while mu is being eliminated.
  [[nodiscard]] auto lambda_untouched() const -> bool { return count(kLambda) == n && t1 == 0; }
};

/// Greek rendering; the empty word prints as the empty-set sign.
inline auto pretty_word(std::string_view w) -> std::string {
  if (w.empty()) return "∅";
  std::string out;
  for (char c : w) out += c == kMu ? "μ" : "λ";
  return out;
}

/// Accepts m/l or the Greek letters mu/lambda.
inline auto parse_word(std::string_view text) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == 'm' || text[i] == 'l') {
      out += text[i++];
    } else if (text.substr(i, 2) == "μ") {
      out += kMu;
      i += 2;
    } else if (text.substr(i, 2) == "λ") {
      out += kLambda;
      i += 2;
    } else {
      throw Error(ErrorCode::MalformedWord,
                  "unexpected character at offset " + std::to_string(i) + " in '" +
                      std::string(text) + "'");
    }
  }
  return out;
}

/// Start of the reduction: w1 = w2 = empty, w3 a shuffle of m mu's and n lambda's.
inline auto initial_state(std::string_view word, std::int64_t m, std::int64_t n) -> SlideState {
  if (m < 0 || n < 0) throw Error(ErrorCode::MalformedWord, "m and n must be non-negative");
  SlideState s;
  s.w3 = parse_word(word);
  s.m = m;
  s.n = n;
  if (s.count(kMu) != m || s.count(kLambda) != n)
    throw Error(ErrorCode::MalformedWord, "word '" + pretty_word(s.w3) + "' is not a shuffle of " +
                                              std::to_string(m) + " mu and " + std::to_string(n) +
                                              " lambda");
  return s;
}

enum class SlideKind { ExtendB1, CommuteLambdaMu, SlideA1OverAlpha, ShrinkA2, SlideA2OverBeta };

struct SlideMove {
  SlideKind kind = SlideKind::ExtendB1;
  std::size_t arg = 0; ///< prefix length for ExtendB1, position for CommuteLambdaMu

  friend auto operator==(const SlideMove &, const SlideMove &) -> bool = default;
};

/// The local picture each move realizes.
inline auto anchor(SlideKind k) -> std::string_view {
  switch (k) {
  case SlideKind::ExtendB1: return "b1 slides along a3 past alpha or a1";
  case SlideKind::CommuteLambdaMu: return "lambda mu -> mu lambda in w2";
  case SlideKind::SlideA1OverAlpha: return "a1 slides over alpha, adding a twist around b3";
  case SlideKind::ShrinkA2: return "a2 shrinks, returning lambda^j to w3";
  case SlideKind::SlideA2OverBeta: return "a2 slides over beta, adding a twist around b1";
  }
  return "";
}

inline auto to_string(SlideKind k) -> std::string {
  switch (k) {
  case SlideKind::ExtendB1: return "ExtendB1";
  case SlideKind::CommuteLambdaMu: return "CommuteLambdaMu";
  case SlideKind::SlideA1OverAlpha: return "SlideA1OverAlpha";
  case SlideKind::ShrinkA2: return "ShrinkA2";
  case SlideKind::SlideA2OverBeta: return "SlideA2OverBeta";
  }
  return "";
}

namespace detail {

[[noreturn]] inline void illegal(SlideKind k, const std::string &why) {
  throw Error(ErrorCode::IllegalMove, to_string(k) + " [" + std::string(anchor(k)) + "]: " + why);
}

inline auto all_lambda(std::string_view w) -> bool {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == kLambda; });
}

/// Isotopy: a mu at the front of w2 is carried onto a1 once a1 is free.
inline void absorb_front_mu(SlideState &s) {
  if (s.w1.empty() && !s.w2.empty() && s.w2.front() == kMu) {
    s.w1 = std::string(1, kMu);
    s.w2.erase(0, 1);
  }
}

} // namespace detail

/// Whether SlideA2OverBeta on s is the terminal isotopy (last lambda).
inline auto is_terminal(const SlideState &s, const SlideMove &mv) -> bool {
  return mv.kind == SlideKind::SlideA2OverBeta && s.w2.size() == 1;
}

inline auto apply_move(SlideState s, const SlideMove &mv) -> SlideState {
  switch (mv.kind) {
  case SlideKind::ExtendB1:
    if (mv.arg == 0 || mv.arg > s.w3.size())
      detail::illegal(mv.kind, "prefix length " + std::to_string(mv.arg) + " but |w3| = " +
                                   std::to_string(s.w3.size()));
    s.w2 += s.w3.substr(0, mv.arg);
    s.w3.erase(0, mv.arg);
    detail::absorb_front_mu(s);
    return s;
  case SlideKind::CommuteLambdaMu:
    if (mv.arg + 1 >= s.w2.size() || s.w2[mv.arg] != kLambda || s.w2[mv.arg + 1] != kMu)
      detail::illegal(mv.kind, "no lambda mu at position " + std::to_string(mv.arg) + " of w2 = " +
                                   pretty_word(s.w2));
    std::swap(s.w2[mv.arg], s.w2[mv.arg + 1]);
    detail::absorb_front_mu(s);
    return s;
  case SlideKind::SlideA1OverAlpha:
    if (s.w1 != std::string(1, kMu)) detail::illegal(mv.kind, "needs w1 = mu");
    s.w1.clear();
    s.t3 += 1;
    return s;
  case SlideKind::ShrinkA2:
    if (!s.w1.empty() || s.w2.empty() || !detail::all_lambda(s.w2))
      detail::illegal(mv.kind, "needs w1 empty and w2 = lambda^j with j >= 1");
    s.w3 = s.w2 + s.w3;
    s.w2.clear();
    return s;
  case SlideKind::SlideA2OverBeta:
    if (!s.w1.empty() || !s.w3.empty() || s.w2.empty() || !detail::all_lambda(s.w2))
      detail::illegal(mv.kind, "needs w1, w3 empty and w2 = lambda^k with k >= 1");
    if (s.w2.size() > 1) s.t1 += 1; // the last lambda is absorbed by isotopy
    s.w2.pop_back();
    return s;
  }
  return s;
}

struct TraceStep {
  SlideMove move;
  bool terminal = false;
  SlideState after;
};

struct SlideRun {
  SlideState initial;
  std::vector<TraceStep> trace;

  [[nodiscard]] auto final_state() const -> const SlideState & {
    return trace.empty() ? initial : trace.back().after;
  }
};

inline auto format_step(const TraceStep &st) -> std::string {
  std::string kind = to_string(st.move.kind);
  if (st.move.kind == SlideKind::ExtendB1 || st.move.kind == SlideKind::CommuteLambdaMu)
    kind += "(" + std::to_string(st.move.arg) + ")";
  if (st.terminal) kind += "(terminal)";
  const auto &s = st.after;
  return "MOVE " + kind + " | w1=" + pretty_word(s.w1) + " w2=" + pretty_word(s.w2) +
         " w3=" + pretty_word(s.w3) + " t3=" + std::to_string(s.t3) + " t1=" + std::to_string(s.t1);
}

namespace detail {

inline void step(SlideRun &run, SlideState &s, SlideMove mv) {
  const bool terminal = is_terminal(s, mv);
  s = apply_move(std::move(s), mv);
  run.trace.push_back({mv, terminal, s});
}

inline void check_start(const SlideState &s) {
  if (!s.w1.empty() || !s.w2.empty() || s.t1 != 0 || s.t3 != 0)
    throw Error(ErrorCode::MalformedWord, "reduction starts from w1 = w2 = empty, t1 = t3 = 0");
  if (!s.mu_balanced() || !s.lambda_untouched())
    throw Error(ErrorCode::MalformedWord, "w3 is not a shuffle of m mu and n lambda");
}

inline void eliminate_mu(SlideRun &run, SlideState &s) {
  for (;;) {
    const auto j = s.w3.find(kMu);
    if (j == std::string::npos) return;
    step(run, s, {SlideKind::ExtendB1, j + 1}); // w2 = lambda^j mu
    for (std::size_t p = j; p-- > 0;) step(run, s, {SlideKind::CommuteLambdaMu, p});
    step(run, s, {SlideKind::SlideA1OverAlpha, 0});
    if (j > 0) step(run, s, {SlideKind::ShrinkA2, 0});
  }
}

} // namespace detail

/// Ends at w1 = w2 = empty, w3 = lambda^n, t3 = m, t1 = 0.
inline auto reduce_mu(const SlideState &start) -> SlideRun {
  detail::check_start(start);
  SlideRun run{start, {}};
  SlideState s = start;
  detail::eliminate_mu(run, s);
  return run;
}

/// Ends with all words empty, t3 = m, t1 = n - 1. Needs n >= 1.
inline auto reduce_full(const SlideState &start) -> SlideRun {
  detail::check_start(start);
  if (start.n == 0)
    throw Error(ErrorCode::NotApplicable, "the terminal isotopy consumes one lambda; n must be >= 1");
  SlideRun run{start, {}};
  SlideState s = start;
  detail::eliminate_mu(run, s);
  detail::step(run, s, {SlideKind::ExtendB1, s.w3.size()});
  while (!s.w2.empty()) detail::step(run, s, {SlideKind::SlideA2OverBeta, 0});
  return run;
}

/// Folds apply_move over the recorded moves.
inline auto replay(const SlideRun &run) -> SlideState {
  SlideState s = run.initial;
  for (const auto &st : run.trace) s = apply_move(std::move(s), st.move);
  return s;
}

} // namespace trisect
