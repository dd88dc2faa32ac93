#include "mdeform/tables.hpp"

#include "mdeform/io.hpp"

namespace mdeform::tables {

namespace {

LaurentPoly laurent(long offset, std::vector<long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return LaurentPoly(offset, std::move(c));
}

IntPoly poly(const char* text) { return parse_intpoly(text); }
LaurentPoly lpoly(const char* text) { return parse_laurent(text); }

}  // namespace

const std::vector<PrintedLaurent>& h_values() {
  static const std::vector<PrintedLaurent> table{
      {"a", laurent(-1, {1})},
      {"b", laurent(-2, {1, 0, 1})},
      {"ab", laurent(-3, {1, 1, 1, 1, 1})},
      {"a2b", laurent(-4, {1, 2, 2, 3, 2, 2, 1})},
      {"ab2", laurent(-5, {1, 2, 4, 5, 5, 5, 4, 2, 1})},
      {"a3b", laurent(-5, {1, 3, 4, 6, 6, 6, 4, 3, 1})},
      {"a2bab", laurent(-7, {1, 4, 9, 16, 23, 29, 30, 29, 23, 16, 9, 4, 1})},
      {"abab2", laurent(-8, {1, 4, 11, 22, 36, 50, 60, 65, 60, 50, 36, 22, 11, 4, 1})},
      {"ab3", laurent(-7, {1, 3, 8, 14, 20, 25, 27, 25, 20, 14, 8, 3, 1})},
      {"a4b", laurent(-9, {1, 4, 13, 29, 53, 82, 110, 131, 139, 131, 110, 82, 53, 29, 13, 4, 1})},
      {"a3ba2b", laurent(-9, {1, 6, 18, 40, 72, 110, 148, 175, 185, 175, 148, 110, 72, 40, 18, 6, 1})},
      {"a2ba2bab", laurent(-11, {1, 7, 26, 70, 151, 276, 440, 623, 793, 914, 959, 914, 793, 623, 440, 276, 151, 70,
                                 26, 7, 1})},
      {"a2babab", laurent(-10, {1, 6, 20, 49, 97, 164, 240, 313, 366, 385, 366, 313, 240, 164, 97, 49, 20, 6, 1})},
      {"ababab2", laurent(-11, {1, 6, 22, 59, 128, 235, 375, 533, 679, 784, 822, 784, 679, 533, 375, 235, 128, 59,
                                22, 6, 1})},
      {"abab2ab2", laurent(-13, {1, 7, 30, 94, 237, 504, 932, 1531, 2264, 3045, 3746, 4236, 4412, 4236, 3746, 3045,
                                 2264, 1531, 932, 504, 237, 94, 30, 7, 1})},
      {"ab2ab3", laurent(-12, {1, 6, 24, 70, 165, 328, 567, 870, 1201, 1504, 1717, 1795, 1717, 1504, 1201, 870, 567,
                               328, 165, 70, 24, 6, 1})},
      {"ab4", laurent(-9, {1, 4, 13, 29, 53, 82, 110, 131, 139, 131, 110, 82, 53, 29, 13, 4, 1})},
  };
  return table;
}

const std::vector<PrintedPoly>& f_values() {
  static const std::vector<PrintedPoly> table{
      {"a", poly("1")},
      {"b", poly("t-1")},
      {"ab", poly("t^2-t-1")},
      {"a2b", poly("t^3-t^2-2t+1")},
      {"ab2", poly("t^4-2t^3+t-1")},
      {"a3b", poly("t^4-t^3-3t^2+2t+1")},
      {"a2bab", poly("t^6-2t^5-2t^4+4t^3+t^2-t-1")},
      {"abab2", poly("t^7-3t^6+t^5+3t^4-2t^3+1")},
      {"ab3", poly("t^6-3t^5+2t^4+t^3-3t^2+2t+1")},
      {"a4b", poly("t^5-t^4-4t^3+3t^2+3t-1")},
      {"a3ba2b", poly("t^8-2t^7-4t^6+8t^5+4t^4-8t^3+t-1")},
      {"a2ba2bab", poly("t^10-3t^9-2t^8+11t^7-t^6-12t^5+2t^4+4t^3+1")},
      {"a2babab", poly("t^9-3t^8-t^7+8t^6-t^5-6t^4-2t^3+3t^2+3t-1")},
      {"ababab2", poly("t^10-4t^9+3t^8+5t^7-6t^6-t^5+t^4+3t^3-t^2-2t+1")},
      {"abab2ab2", poly("t^12-5t^11+7t^10+2t^9-12t^8+8t^7+2t^6-4t^5+1")},
      {"ab2ab3", poly("t^11-5t^10+8t^9-2t^8-9t^7+13t^6-4t^5-6t^4+5t^3-t^2-2t+1")},
      {"ab4", poly("t^8-4t^7+5t^6-t^5-5t^4+7t^3-t^2-2t+1")},
  };
  return table;
}

const std::vector<PrintedQRational>& q_rationals() {
  static const std::vector<PrintedQRational> table{
      {5, 2, {2, 2}, {3, 2}, lpoly("1+2q+q^2+q^3"), lpoly("1+q")},
      {5, 3, {1, 1, 1, 1}, {2, 3}, lpoly("1+q+2q^2+q^3"), lpoly("1+q+q^2")},
      {7, 3, {2, 3}, {3, 2, 2}, lpoly("1+2q+2q^2+q^3+q^4"), lpoly("1+q+q^2")},
      {7, 4, {1, 1, 2, 1}, {2, 4}, lpoly("1+q+2q^2+2q^3+q^4"), lpoly("1+q+q^2+q^3")},
      {7, 5, {1, 1, 2, 1}, {2, 2, 3}, lpoly("1+q+2q^2+2q^3+q^4"), lpoly("1+q+2q^2+q^3")},
  };
  return table;
}

const std::vector<std::pair<std::string, IntPoly>>& search_targets() {
  static const std::vector<std::pair<std::string, IntPoly>> table{
      {"f2", poly("t^2-t-1")},
      {"f3", poly("t^4-2t^3+t-1")},
      {"f4", poly("t^7-3t^6+t^5+2t^4+t^3-t^2-t-1")},
      {"f5", poly("t^14-6t^13+11t^12-2t^11-9t^10-4t^9+10t^8+7t^7-2t^6-7t^5-3t^4+t^3+2t^2+t-1")},
      {"f6", poly("t^28-12t^27+58t^26-136t^25+127t^24+56t^23-126t^22-158t^21+229t^20+196t^19-158t^18-314t^17"
                  "+34t^16+294t^15+146t^14-142t^13-213t^12-26t^11+116t^10+90t^9-9t^8-45t^7-23t^6+5t^5+9t^4"
                  "+3t^3-t^2-t-1")},
      {"f3a_1", poly("t^5-2t^4+2t+1")},
      {"f3a_2", poly("t^5-2t^4-t^2+2t+1")},
      {"f2a1", poly("t^6-2t^5-2t^4+4t^3-t^2-t-1")},
      {"f2a1_a", poly("t^9-3t^8-t^7+8t^6-t^5-6t^4-2t^3+3t^2+3t-1")},
      {"f2a1_b", poly("t^10-3t^9-2t^8+11t^7-t^6-12t^5+2t^4+3t^2+1")},
      {"f2a2", poly("t^12-4t^11+16t^9-10t^8-22t^7+15t^6+14t^5-5t^4-6t^3+t-1")},
      {"f3aa", poly("t^4-t^3-3t^2+2t+1")},
  };
  return table;
}

const std::vector<PolyCFDisplay>& polycf_displays() {
  using T = PolyCFTerm;
  const T zero{0, false, ""};
  static const std::vector<PolyCFDisplay> table{
      {"a3ba3ba2b", "a3ba3ba3ba2b", {zero, {1, true, "a3b"}, {-1, true, "a3b"}, {1, true, "a3b"}, {-1, false, "a2b"}}},
      {"a2ba2bab",
       "a2ba2baba2bab",
       {zero, {1, true, "a2b"}, {-1, true, "a2bab"}, {1, true, ""}, {-1, true, ""}, {1, false, "b"}}},
      {"a2ba2baba2bab",
       "a2baba2ba2baba2bab",
       {zero, {1, true, "a2bab"}, {-1, true, "a2b"}, {1, true, "a2bab"}, {-1, true, ""}, {1, true, ""},
        {-1, false, "b"}}},
      {"a2babab", "a2baba2babab", {zero, {1, true, "a2bab"}, {-1, true, "a2bab"}, {-1, true, ""}, {1, false, "b"}}},
      {"a2baba2babab",
       "a2baba2baba2babab",
       {zero, {1, true, "a2bab"}, {-1, true, "a2bab"}, {1, true, "a2bab"}, {1, true, ""}, {-1, false, "b"}}},
      {"ababab2", "ababab2abab2", {zero, {1, true, "abab2"}, {-1, true, "abab2"}, {1, false, "ab"}, {-1, false, "ab"}}},
      {"ababab2abab2",
       "ababab2abab2abab2",
       {zero, {1, true, "abab2"}, {-1, true, "abab2"}, {1, true, "abab2"}, {-1, false, "ab"}, {1, false, "ab"}}},
      {"abab2abab2ab2",
       "abab2abab2abab2ab2",
       {zero, {1, true, "abab2"}, {-1, true, "abab2"}, {1, true, "b"}, {-1, false, "ab"}}},
      {"ab2ab3", "ab2ab3ab3", {zero, {1, true, "ab3"}, {-1, true, "ab3"}, {1, false, "a2b"}, {-1, false, "b"}}},
      {"ab2ab3ab3",
       "ab2ab3ab3ab3",
       {zero, {1, true, "ab2"}, {-1, true, "ab2"}, {1, true, "ab2"}, {-1, false, "ab2"}, {-1, false, "a2b"},
        {1, false, "b"}}},
      {"ab4", "ab3ab4", {zero, {1, true, "ab3"}, {-1, false, "ab2"}, {-1, false, "ab"}, {1, false, "ab2"}}},
  };
  return table;
}

const std::vector<std::array<long, 3>>& castling_branch() {
  static const std::vector<std::array<long, 3>> table{{2, 5, 29},  {5, 29, 433},   {2, 29, 169},
                                                      {5, 13, 194}, {5, 194, 2897}, {13, 194, 7561}};
  return table;
}

PrintedRelation printed_last_relation() { return {{13, 194, 7561}, 57206526, {13, 194, 7651}}; }

PrintedFixedPoint fixed_point_a2b() {
  return {"a2b", lpoly("q^8+3q^7+5q^6+7q^5+5q^4+3q^3+q^2-q-1"),
          lpoly("2q") * lpoly("q^6+2q^5+4q^4+4q^3+4q^2+3q+1"),
          lpoly("q^16+6q^15+19q^14+44q^13+81q^12+126q^11+171q^10+204q^9+213q^8+204q^7+171q^6+126q^5+81q^4+44q^3"
                "+19q^2+6q+1"),
          {1, 1, 1, 1, 2, 2}};
}

PrintedEntries entries_a3b_a2b() {
  return {lpoly("q^-5") * lpoly("q^7+4q^6+6q^5+7q^4+7q^3+5q^2+3q+1"),
          lpoly("q^-4") * lpoly("q^5+3q^4+3q^3+3q^2+2q+1"),
          lpoly("q^-9") * lpoly("q^15+7q^14+23q^13+52q^12+93q^11+138q^10+177q^9+197q^8+194q^7+167q^6+125q^5"
                                "+81q^4+44q^3+19q^2+6q+1")};
}

const std::vector<PrintedLaurent>& bridge_values() {
  static const std::vector<PrintedLaurent> table{
      {"a2b", lpoly("q^-3") * lpoly("q^6+2q^5+2q^4+3q^3+2q^2+2q+1")},
      {"a2bab", lpoly("q^-6") * lpoly("q^12+4q^11+9q^10+16q^9+23q^8+29q^7+30q^6+29q^5+23q^4+16q^3+9q^2+4q+1")},
  };
  return table;
}

std::array<LaurentPoly, 4> bq_opening() {
  return {lpoly("q^2+q+2+q^-1"), lpoly("1+q^-1"), lpoly("1+q^-1"), lpoly("q^-2")};
}

std::array<LaurentPoly, 4> bq_markov_section() {
  return {lpoly("q^2+q+2+q^-1"), lpoly("q^-1+q^-2"), lpoly("1+q^-1"), lpoly("q^-2")};
}

}  // namespace mdeform::tables
