#include <map>

#include "gtest/gtest.h"

#include "egd/bruhat.hpp"
#include "egd/parabolic.hpp"
#include "egd/sweep.hpp"

using namespace egd;

namespace {

struct Case {
  const char* diagram;
  std::uint32_t J;
};

// brute force over all ordered pairs, straight from the definition
std::vector<Violation> naive(const WeylGroup& g, const LengthStrata& strata, int degree,
                             bool halve) {
  std::vector<Violation> out;
  const int top = strata.max_length();
  for (int lv = 1; lv <= top; ++lv) {
    const int cu = degree - lv;
    if (cu < 0 || cu > top) continue;
    if (halve && lv > cu) continue;
    const auto& vs = strata.at(lv);
    const auto& us = strata.at(top - cu);
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = 0; b < us.size(); ++b)
        if (!bruhat_leq(g, vs[a], us[b]))
          out.push_back({lv, static_cast<int>(a), cu, static_cast<int>(b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(SweepKernels, SerialMatchesDefinition) {
  for (const Case& c : {Case{"A3", 0}, Case{"B3", 0}, Case{"D4", 0}, Case{"D4", 0b1110},
                        Case{"B3", 0b010}, Case{"G2", 0}}) {
    const WeylGroup g(DynkinSpec::parse(c.diagram));
    const NodeSet J(c.J);
    const auto strata = quotient_strata(g, J);
    for (int degree = 1; degree <= strata.max_length(); ++degree)
      for (bool halve : {false, true}) {
        if (halve && !J.empty()) continue;
        SweepRequest req{degree, halve};
        EXPECT_EQ(sweep_serial(g, strata, req), naive(g, strata, degree, halve))
            << c.diagram << " J=" << J.str() << " degree " << degree;
      }
  }
}

TEST(SweepKernels, ParallelMatchesSerial) {
  for (const Case& c : {Case{"A4", 0}, Case{"B4", 0}, Case{"D4", 0}, Case{"D5", 0},
                        Case{"D5", 0b11110}, Case{"F4", 0b1110}, Case{"B4", 0b0101}}) {
    const WeylGroup g(DynkinSpec::parse(c.diagram));
    const NodeSet J(c.J);
    const auto strata = quotient_strata(g, J);
    for (int degree = 1; degree <= strata.max_length(); degree += 2) {
      SweepRequest req{degree, J.empty()};
      const auto ref = sweep_serial(g, strata, req);
      for (int workers : {1, 8})
        EXPECT_EQ(sweep_parallel(g, strata, req, workers), ref)
            << c.diagram << " J=" << J.str() << " degree " << degree << " workers " << workers;
    }
  }
}

TEST(SweepKernels, StopAtFirstAgreesOnExistence) {
  const WeylGroup g(DynkinSpec::parse("D5"));
  const auto strata = quotient_strata(g, NodeSet::none());
  for (int degree = 6; degree <= 9; ++degree) {
    SweepRequest full{degree, true};
    SweepRequest first{degree, true, true, true};
    const auto all = sweep_serial(g, strata, full);
    const auto s = sweep_serial(g, strata, first);
    EXPECT_LE(s.size(), 1u);
    EXPECT_EQ(s.empty(), all.empty());
    if (!s.empty()) EXPECT_EQ(s.front(), all.front());
    const auto p = sweep_parallel(g, strata, first, 8);
    EXPECT_EQ(p.empty(), all.empty());
    for (const auto& v : p) EXPECT_NE(std::find(all.begin(), all.end(), v), all.end());
  }
}

TEST(SweepKernels, QuotientViolationsSymmetricInLengthAndCodimension) {
  for (const Case& c : {Case{"B3", 0b010}, Case{"D4", 0b0110}, Case{"A4", 0b0101},
                        Case{"G2", 0b01}, Case{"D5", 0b00011}}) {
    const WeylGroup g(DynkinSpec::parse(c.diagram));
    const auto strata = quotient_strata(g, NodeSet(c.J));
    for (int degree = 1; degree <= strata.max_length(); ++degree) {
      std::map<std::pair<int, int>, int> count;
      for (const auto& v : sweep_serial(g, strata, {degree, false})) ++count[{v.len_v, v.codim_u}];
      for (const auto& [key, n] : count) {
        const auto it = count.find({key.second, key.first});
        EXPECT_EQ(it == count.end() ? 0 : it->second, n) << c.diagram << " degree " << degree;
      }
    }
  }
}
