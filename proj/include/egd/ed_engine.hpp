#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "egd/bruhat.hpp"
#include "egd/dynkin.hpp"
#include "egd/node_set.hpp"
#include "egd/weyl_group.hpp"

namespace egd {

// D(R): the diagram marked at R. Internally everything works with J = Delta \ R.
struct MarkedDiagram {
  DynkinSpec spec;
  NodeSet marked;

  static MarkedDiagram parse(std::string_view diagram, std::string_view marked);
  // "A4:1", "B4:all", "D4:2,3"
  static MarkedDiagram parse_pair(std::string_view text);

  NodeSet parabolic() const { return marked.complement(spec.rank); }
  bool is_flag() const { return marked == NodeSet::all(spec.rank); }
  std::string str() const;  // "D4(1,2,3,4)"
};

struct EngineOptions {
  int workers = 1;
  std::size_t budget = 1'000'000;  // quotient elements
  bool extended = false;           // unlock the E6 flag and E7/E8 sweeps
  bool serial_kernel = false;      // use the reference sweep
};

struct MdPair {
  WeylElement u;
  WeylElement v;
  int len_v = 0;
  int codim_u = 0;
  int degree = 0;
  std::set<int> tags;  // nodes r such that the pair is pulled back from D(r)
};

enum class Method { ClosedForm, BruteForce, Both };
std::string_view to_string(Method m);
Method parse_method(std::string_view text);  // closed | brute | both

struct EdResult {
  int value = 0;
  Method method = Method::Both;
  std::optional<int> closed_form;
  std::optional<int> brute_force;
  int dimension = 0;
  bool capped = false;  // no violation up to the dimension
  std::optional<MdPair> witness;
};

std::optional<int> closed_form_ed(const MarkedDiagram& md);

// Throws Infeasible if the sweep policy or the element budget forbids it.
void check_sweep_allowed(const MarkedDiagram& md, const EngineOptions& opt);

// Every u, v in W^J with l(v) + c^J(u) = s satisfy v <= u.
bool has_egd_up_to(const WeylGroup& group, NodeSet J, int s, const EngineOptions& opt = {});

EdResult effective_divisibility(const MarkedDiagram& md, Method mode,
                                const EngineOptions& opt = {});
// Same, with the witness expressed in the caller's group.
EdResult effective_divisibility(const WeylGroup& group, const MarkedDiagram& md, Method mode,
                                const EngineOptions& opt = {});

// Pairs at degree ed + 1 with 0 < l(v) <= c^J(u), sorted by (l(v), canonical
// word of v, canonical word of u), tagged with the general pullback criterion.
std::vector<MdPair> md_pairs(const WeylGroup& group, const MarkedDiagram& md,
                             const EngineOptions& opt = {});

// Pullback nodes of a pair on D(R): lift u -> u w_{0J}, keep v, and test
// r in R against Delta \ {r}.
std::set<int> pullback_tags(const WeylGroup& group, const MarkedDiagram& md,
                            const WeylElement& u, const WeylElement& v);

// Type D flag pairs: node 1 by {v^J, u^J} = {w_alpha, w_beta} for
// J = Delta \ {1}, nodes n-1 and n by the pullback test on those quotients.
std::vector<MdPair> classify_md_pairs(const WeylGroup& group, std::vector<MdPair> pairs);

// ---- morphisms ----

struct MorphismSource {
  std::optional<MarkedDiagram> diagram;
  std::optional<int> ed;  // user-supplied value for an arbitrary variety

  static MorphismSource parse(std::string_view text);  // "A4:1" or "ed=7" / "7"
  std::string str() const;
};

struct MorphismVerdict {
  bool constant = false;
  int source_ed = 0;
  int target_ed = 0;
  bool subdiagram_rule = false;  // target diagram is a proper subdiagram of the source's
  std::string reason;
};

MorphismVerdict morphism_constancy(const MorphismSource& source, const MarkedDiagram& target,
                                   const EngineOptions& opt = {});

// Embedding of the Dynkin diagram `sub` as an induced subdiagram of `super`,
// arrows included.
bool is_subdiagram(const DynkinSpec& sub, const DynkinSpec& super);

}  // namespace egd
