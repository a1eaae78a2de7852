#include "g2/reftables.hpp"

namespace g2 {

const std::array<InverseActionRow, 12>& inverse_action_rows() {
  static const std::array<InverseActionRow, 12> rows = {{
      {0, "1", {1, 0}, {0, 1}},
      {1, "w_β", {1, 1}, {0, -1}},
      {2, "w_βα", {2, 1}, {-3, -1}},
      {3, "w_βαβ", {2, 1}, {-3, -2}},
      {4, "w_βαβα", {1, 1}, {-3, -2}},
      {5, "w_βαβαβ", {1, 0}, {-3, -1}},
      {1, "w_α", {-1, 0}, {3, 1}},
      {2, "w_αβ", {-1, -1}, {3, 2}},
      {3, "w_αβα", {-2, -1}, {3, 2}},
      {4, "w_αβαβ", {-2, -1}, {3, 1}},
      {5, "w_αβαβα", {-1, -1}, {0, 1}},
      {6, "w_G", {-1, 0}, {0, -1}},
  }};
  return rows;
}

std::string AffineEntry::to_string() const {
  std::string s;
  auto term = [&](long long c, const char* sym) {
    if (c == 0) return;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c > 0 ? "+" : "-";
    }
    long long m = c < 0 ? -c : c;
    if (m != 1 || !*sym) s += std::to_string(m);
    s += sym;
  };
  term(ca, "a");
  term(cb, "b");
  term(cw, "w");
  term(c0, "");
  return s.empty() ? "0" : s;
}

const std::array<TwistedActionRow, 6>& twisted_action_rows(Parabolic tag) {
  static const std::array<TwistedActionRow, 6> beta = {{
      {0, "1",
       {{1, 0, 0, 0}, {0, 1, 0, 0}},
       {{0, -1, 1, 0}, {-1, 0, 1, 0}}},
      {1, "w_α",
       {{1, 0, 0, 0}, {1, -1, 0, -1}},
       {{0, -1, 1, 0}, {1, -1, 0, -1}}},
      {2, "w_αβ",
       {{1, -1, 0, -2}, {1, 0, 0, 1}},
       {{1, -1, 0, -2}, {0, -1, 1, 1}}},
      {3, "w_αβα",
       {{1, -1, 0, -2}, {0, -1, 0, -4}},
       {{1, -1, 0, -2}, {1, 0, -1, -4}}},
      {4, "w_αβαβ",
       {{0, -1, 0, -5}, {1, -1, 0, -1}},
       {{1, 0, -1, -5}, {1, -1, 0, -1}}},
      {5, "w_αβαβα",
       {{0, -1, 0, -5}, {-1, 0, 0, -5}},
       {{1, 0, -1, -5}, {0, 1, -1, -5}}},
  }};
  static const std::array<TwistedActionRow, 6> alpha = {{
      {0, "1",
       {{1, 0, 0, 0}, {0, 1, 0, 0}},
       {{0, -1, 1, 0}, {-1, 0, 1, 0}}},
      {1, "w_β",
       {{1, 1, 0, 1}, {0, -1, 0, -2}},
       {{-1, -1, 2, 1}, {1, 0, -1, -2}}},
      {2, "w_βα",
       {{0, -1, 0, -3}, {1, 1, 0, 2}},
       {{1, 0, -1, -3}, {-1, -1, 2, 2}}},
      {3, "w_βαβ",
       {{1, 0, 0, 0}, {-1, -1, 0, -4}},
       {{0, -1, 1, 0}, {1, 1, -2, -4}}},
      {4, "w_βαβα",
       {{-1, -1, 0, -5}, {1, 0, 0, 1}},
       {{1, 1, -2, -5}, {0, -1, 1, 1}}},
      {5, "w_βαβαβ",
       {{0, -1, 0, -3}, {-1, 0, 0, -3}},
       {{1, 0, -1, -3}, {0, 1, -1, -3}}},
  }};
  return tag == Parabolic::PBeta ? beta : alpha;
}

}  // namespace g2
