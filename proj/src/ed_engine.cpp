#include "egd/ed_engine.hpp"

#include <algorithm>
#include <charconv>

#include "egd/error.hpp"
#include "egd/parabolic.hpp"
#include "egd/sweep.hpp"

namespace egd {

MarkedDiagram MarkedDiagram::parse(std::string_view diagram, std::string_view marked) {
  const DynkinSpec spec = DynkinSpec::parse(diagram);
  const NodeSet r = NodeSet::parse(marked, spec.rank);
  if (r.empty()) throw Error(ErrorKind::EmptyMarkedSet, "marked set must be nonempty");
  return {spec, r};
}

MarkedDiagram MarkedDiagram::parse_pair(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::Parse, "expected <diagram>:<marked>, got '" + std::string(text) + "'");
  return parse(text.substr(0, colon), text.substr(colon + 1));
}

std::string MarkedDiagram::str() const { return spec.name() + "(" + marked.str() + ")"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::BruteForce: return "brute_force";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "closed") return Method::ClosedForm;
  if (text == "brute") return Method::BruteForce;
  if (text == "both") return Method::Both;
  throw Error(ErrorKind::Parse, "mode must be closed, brute or both");
}

std::optional<int> closed_form_ed(const MarkedDiagram& md) {
  const int n = md.spec.rank;
  switch (md.spec.family) {
    case Family::A: return n;
    case Family::B:
    case Family::C: return 2 * n - 1;
    case Family::D: {
      const NodeSet ends = NodeSet::of({1, n - 1, n});
      return md.marked.intersect(ends).empty() ? 2 * n - 2 : 2 * n - 3;
    }
    case Family::G: return md.is_flag() ? std::optional<int>(5) : std::nullopt;
    case Family::F: return md.is_flag() ? std::optional<int>(12) : std::nullopt;
    case Family::E:
      if (n == 6 && md.is_flag()) return 12;
      return std::nullopt;
  }
  return std::nullopt;
}

void check_sweep_allowed(const MarkedDiagram& md, const EngineOptions& opt) {
  if (opt.extended) return;
  if (md.spec.family == Family::E && md.spec.rank >= 7)
    throw Error(ErrorKind::Infeasible, md.spec.name() + " sweeps need --extended");
  if (md.spec.family == Family::E && md.is_flag())
    throw Error(ErrorKind::Infeasible, md.spec.name() + " flag sweep needs --extended");
}

namespace {

std::vector<Violation> run_kernel(const WeylGroup& group, const LengthStrata& strata,
                                  const SweepRequest& req, const EngineOptions& opt) {
  return opt.serial_kernel ? sweep_serial(group, strata, req)
                           : sweep_parallel(group, strata, req, opt.workers);
}

struct SweepOutcome {
  int ed = 0;
  int dimension = 0;
  bool capped = false;
  std::vector<MdPair> pairs;
};

SweepOutcome sweep(const WeylGroup& group, const MarkedDiagram& md, const EngineOptions& opt) {
  check_sweep_allowed(md, opt);
  const NodeSet J = md.parabolic();
  const LengthStrata strata = quotient_strata(group, J, opt.budget);
  SweepOutcome out;
  out.dimension = strata.max_length();
  out.ed = out.dimension;
  out.capped = true;
  // Divisibility up to s implies it up to every r <= s, so the first failing
  // degree determines ed.
  for (int s = 1; s <= out.dimension; ++s) {
    SweepRequest req;
    req.degree = s;
    req.halve = J.empty();
    req.stop_at_first = true;
    if (!run_kernel(group, strata, req, opt).empty()) {
      out.ed = s - 1;
      out.capped = false;
      break;
    }
  }
  if (out.capped) return out;

  SweepRequest req;
  req.degree = out.ed + 1;
  req.halve = true;
  for (const Violation& x : run_kernel(group, strata, req, opt)) {
    MdPair p;
    p.v = strata.at(x.len_v)[x.v_index];
    p.u = strata.at(out.dimension - x.codim_u)[x.u_index];
    p.len_v = x.len_v;
    p.codim_u = x.codim_u;
    p.degree = req.degree;
    p.tags = pullback_tags(group, md, p.u, p.v);
    out.pairs.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool has_egd_up_to(const WeylGroup& group, NodeSet J, int s, const EngineOptions& opt) {
  const LengthStrata strata = quotient_strata(group, J, opt.budget);
  if (s < 0 || s > strata.max_length())
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(s) + " outside 0.." +
                                                 std::to_string(strata.max_length()));
  if (s == 0) return true;
  SweepRequest req;
  req.degree = s;
  req.halve = J.empty();
  req.stop_at_first = true;
  return run_kernel(group, strata, req, opt).empty();
}

EdResult effective_divisibility(const MarkedDiagram& md, Method mode, const EngineOptions& opt) {
  const WeylGroup group(md.spec);
  return effective_divisibility(group, md, mode, opt);
}

EdResult effective_divisibility(const WeylGroup& group, const MarkedDiagram& md, Method mode,
                                const EngineOptions& opt) {
  if (group.spec() != md.spec) throw Error(ErrorKind::ContextMismatch, "diagram/group mismatch");
  if (md.marked.empty()) throw Error(ErrorKind::EmptyMarkedSet, "marked set must be nonempty");
  EdResult res;
  if (mode != Method::BruteForce) res.closed_form = closed_form_ed(md);
  if (mode == Method::ClosedForm && !res.closed_form)
    throw Error(ErrorKind::ClosedFormUnavailable, "no closed form for " + md.str());

  std::optional<SweepOutcome> brute;
  if (mode != Method::ClosedForm) {
    try {
      brute = sweep(group, md, opt);
      res.brute_force = brute->ed;
      res.dimension = brute->dimension;
      res.capped = brute->capped;
      if (!brute->pairs.empty()) res.witness = brute->pairs.front();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Infeasible || mode == Method::BruteForce || !res.closed_form)
        throw;
    }
  }
  if (res.dimension == 0) {
    res.dimension = longest_in_quotient(group, md.parabolic()).length();
  }

  if (res.closed_form && res.brute_force) {
    if (*res.closed_form != *res.brute_force)
      throw Error(ErrorKind::Internal, "closed form " + std::to_string(*res.closed_form) +
                                           " disagrees with sweep " +
                                           std::to_string(*res.brute_force) + " for " + md.str());
    res.method = Method::Both;
    res.value = *res.brute_force;
  } else if (res.brute_force) {
    res.method = Method::BruteForce;
    res.value = *res.brute_force;
  } else {
    res.method = Method::ClosedForm;
    res.value = *res.closed_form;
  }
  if (mode == Method::ClosedForm) res.capped = res.value >= res.dimension;
  return res;
}

std::vector<MdPair> md_pairs(const WeylGroup& group, const MarkedDiagram& md,
                             const EngineOptions& opt) {
  if (md.marked.empty()) throw Error(ErrorKind::EmptyMarkedSet, "marked set must be nonempty");
  if (group.spec() != md.spec) throw Error(ErrorKind::ContextMismatch, "diagram/group mismatch");
  return sweep(group, md, opt).pairs;
}

std::set<int> pullback_tags(const WeylGroup& group, const MarkedDiagram& md,
                            const WeylElement& u, const WeylElement& v) {
  const int n = md.spec.rank;
  const WeylElement lifted = group.multiply(u, longest_in_parabolic(group, md.parabolic()));
  std::set<int> tags;
  for (int r : md.marked.nodes()) {
    const NodeSet Jr = NodeSet::all(n).without(r);
    if (is_schubert_pullback(group, lifted, Jr) && is_opposite_pullback(group, v, Jr))
      tags.insert(r);
  }
  return tags;
}

std::vector<MdPair> classify_md_pairs(const WeylGroup& group, std::vector<MdPair> pairs) {
  const DnDistinguished d = dn_distinguished(group);  // throws NotTypeD
  const int n = group.rank();
  const NodeSet all = NodeSet::all(n);
  const NodeSet quadric = all.without(1);
  for (MdPair& p : pairs) {
    p.tags.clear();
    const WeylElement vu = decompose(group, p.v, quadric).up;
    const WeylElement uu = decompose(group, p.u, quadric).up;
    if ((vu == d.w_alpha && uu == d.w_beta) || (vu == d.w_beta && uu == d.w_alpha))
      p.tags.insert(1);
    for (int r : {n - 1, n}) {
      const NodeSet Jr = all.without(r);
      if (is_schubert_pullback(group, p.u, Jr) && is_opposite_pullback(group, p.v, Jr))
        p.tags.insert(r);
    }
  }
  return pairs;
}

// ---- morphisms ----

MorphismSource MorphismSource::parse(std::string_view text) {
  MorphismSource s;
  std::string_view num = text;
  if (num.starts_with("ed=")) num.remove_prefix(3);
  int v = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
  if (!num.empty() && ec == std::errc() && ptr == num.data() + num.size()) {
    if (v < 0) throw Error(ErrorKind::Parse, "ed value must be nonnegative");
    s.ed = v;
    return s;
  }
  s.diagram = MarkedDiagram::parse_pair(text);
  return s;
}

std::string MorphismSource::str() const {
  return diagram ? diagram->str() : "ed=" + std::to_string(ed.value_or(0));
}

bool is_subdiagram(const DynkinSpec& sub, const DynkinSpec& super) {
  if (sub.rank > super.rank) return false;
  const Matrix a = oriented_cartan_matrix(sub);
  const Matrix b = oriented_cartan_matrix(super);
  std::vector<int> image(sub.rank, -1);
  std::vector<bool> used(super.rank, false);
  auto place = [&](auto&& self, int i) -> bool {
    if (i == sub.rank) return true;
    for (int t = 0; t < super.rank; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a[i][j] == b[t][image[j]] && a[j][i] == b[image[j]][t];
      if (!ok) continue;
      used[t] = true;
      image[i] = t;
      if (self(self, i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return place(place, 0);
}

MorphismVerdict morphism_constancy(const MorphismSource& source, const MarkedDiagram& target,
                                   const EngineOptions& opt) {
  MorphismVerdict out;
  out.source_ed = source.diagram ? effective_divisibility(*source.diagram, Method::Both, opt).value
                                 : source.ed.value();
  out.target_ed = effective_divisibility(target, Method::Both, opt).value;
  out.subdiagram_rule = source.diagram && source.diagram->spec.classical() &&
                        target.spec.classical() &&
                        target.spec.rank < source.diagram->spec.rank &&
                        is_subdiagram(target.spec, source.diagram->spec);

  const std::string src = source.diagram ? "ed(" + source.str() + ")" : "ed(source)";
  const std::string cmp = src + " = " + std::to_string(out.source_ed) +
                          ", ed(" + target.str() + ") = " + std::to_string(out.target_ed);
  if (!target.spec.classical()) {
    out.reason = cmp + "; the ed criterion is only established for classical targets";
    return out;
  }
  out.constant = out.source_ed > out.target_ed;
  if (out.constant) {
    out.reason = cmp + "; source ed exceeds target ed, every morphism is constant";
    if (out.subdiagram_rule) out.reason += "; target diagram is a proper subdiagram of the source";
  } else {
    out.reason = cmp + "; source ed does not exceed target ed";
  }
  return out;
}

}  // namespace egd
