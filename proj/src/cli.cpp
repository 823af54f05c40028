#include "egd/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "egd/error.hpp"
#include "egd/parabolic.hpp"

namespace egd::cli {

using nlohmann::json;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Infeasible:
    case ErrorKind::ClosedFormUnavailable: return kInfeasible;
    case ErrorKind::Internal: return kInternal;
    default: return kUsage;
  }
}

template <class F>
Output guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), "", std::string("error: ") + std::string(to_string(e.kind())) +
                                             ": " + e.what() + "\n"};
  }
}

std::string bracketed(const Word& w) { return "[" + format_word(w) + "]"; }

std::string node_list(NodeSet s) { return s.empty() ? "none" : s.str(); }

std::string tag_list(const std::set<int>& tags) {
  std::string out = "{";
  for (int t : tags) {
    if (out.size() > 1) out += ',';
    out += std::to_string(t);
  }
  return out + "}";
}

json pair_json(const WeylGroup& group, const MdPair& p, int index) {
  return json{{"index", index},
              {"u", format_word(group.canonical_word(p.u))},
              {"v", format_word(group.canonical_word(p.v))},
              {"len_v", p.len_v},
              {"codim_u", p.codim_u},
              {"degree", p.degree},
              {"tags", std::vector<int>(p.tags.begin(), p.tags.end())}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_pair(const WeylGroup& group, const MdPair& p) {
  std::ostringstream os;
  os << "l(v)=" << p.len_v << " c(u)=" << p.codim_u << " v=" << bracketed(group.canonical_word(p.v))
     << " u=" << bracketed(group.canonical_word(p.u));
  return os.str();
}

Output cmd_ed(const CliConfig& cfg) {
  return guarded([&]() -> Output {
    const MarkedDiagram md = MarkedDiagram::parse(cfg.diagram, cfg.marked);
    const Method mode = parse_method(cfg.mode);
    const WeylGroup group(md.spec);
    const EdResult r = effective_divisibility(group, md, mode, cfg.engine);
    const std::optional<MdPair>& witness = r.witness;
    if (cfg.json) {
      json j{{"diagram", md.spec.name()},
             {"marked", md.marked.str()},
             {"mode", cfg.mode},
             {"budget", cfg.engine.budget},
             {"extended", cfg.engine.extended},
             {"ed", r.value},
             {"method", to_string(r.method)},
             {"dimension", r.dimension},
             {"capped", r.capped},
             {"closed_form", r.closed_form ? json(*r.closed_form) : json(nullptr)},
             {"brute_force", r.brute_force ? json(*r.brute_force) : json(nullptr)},
             {"mdpairs", json::array()}};
      if (witness) j["mdpairs"].push_back(pair_json(group, *witness, 1));
      return {kOk, dump(j), ""};
    }
    std::ostringstream os;
    os << "diagram: " << md.spec.name() << "\n"
       << "marked: " << md.marked.str() << "\n"
       << "mode: " << cfg.mode << "\n"
       << "ed: " << r.value << "\n"
       << "method: " << to_string(r.method) << "\n";
    if (r.closed_form) os << "closed_form: " << *r.closed_form << "\n";
    if (r.brute_force) os << "brute_force: " << *r.brute_force << "\n";
    os << "dimension: " << r.dimension << (r.capped ? " (no violation up to the dimension)" : "")
       << "\n";
    if (witness) os << "witness: " << format_pair(group, *witness) << "\n";
    return {kOk, os.str(), ""};
  });
}

Output cmd_mdpairs(const CliConfig& cfg) {
  return guarded([&]() -> Output {
    const MarkedDiagram md = MarkedDiagram::parse(cfg.diagram, cfg.marked);
    const WeylGroup group(md.spec);
    std::vector<MdPair> pairs = md_pairs(group, md, cfg.engine);
    if (cfg.classify && md.spec.family == Family::D && md.is_flag())
      pairs = classify_md_pairs(group, std::move(pairs));
    EdResult r;
    r.method = Method::BruteForce;
    r.dimension = longest_in_quotient(group, md.parabolic()).length();
    r.capped = pairs.empty();
    r.value = r.capped ? r.dimension : pairs.front().degree - 1;

    if (cfg.json) {
      json j{{"diagram", md.spec.name()},
             {"marked", md.marked.str()},
             {"budget", cfg.engine.budget},
             {"extended", cfg.engine.extended},
             {"classify", cfg.classify},
             {"ed", r.value},
             {"method", to_string(r.method)},
             {"dimension", r.dimension},
             {"capped", r.capped},
             {"mdpairs", json::array()}};
      for (std::size_t k = 0; k < pairs.size(); ++k)
        j["mdpairs"].push_back(pair_json(group, pairs[k], static_cast<int>(k + 1)));
      return {kOk, dump(j), ""};
    }
    std::ostringstream os;
    os << "diagram: " << md.spec.name() << "\n"
       << "marked: " << md.marked.str() << "\n"
       << "ed: " << r.value << "\n"
       << "degree: " << r.value + 1 << "\n";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      os << k + 1 << ") " << format_pair(group, pairs[k]);
      if (cfg.classify) os << " tags=" << tag_list(pairs[k].tags);
      os << "\n";
    }
    return {kOk, os.str(), ""};
  });
}

Output cmd_decompose(const CliConfig& cfg) {
  return guarded([&]() -> Output {
    const DynkinSpec spec = DynkinSpec::parse(cfg.diagram);
    const Word word = parse_word(cfg.word);
    const NodeSet J = NodeSet::parse(cfg.parabolic, spec.rank);
    const WeylGroup group(spec);
    const WeylElement w = group.from_word(word);
    const Decomposition d = decompose(group, w, J);
    const CodimData c = codimensions(group, w, J);
    const Word up = group.canonical_word(d.up);
    const Word down = group.canonical_word(d.down);
    const Word dec = stripped_letters(group, w, J);

    if (cfg.json) {
      json j{{"diagram", spec.name()},
             {"word", format_word(word)},
             {"J", J.str()},
             {"w", format_word(group.canonical_word(w))},
             {"u^J", format_word(up)},
             {"u_J", format_word(down)},
             {"dec", format_word(dec)},
             {"length", w.length()},
             {"len_up", d.up.length()},
             {"len_down", d.down.length()},
             {"c", c.total},
             {"c^J", c.up},
             {"c_J", c.down}};
      return {kOk, dump(j), ""};
    }
    std::ostringstream os;
    os << "diagram: " << spec.name() << "\n"
       << "word: " << format_word(word) << "\n"
       << "J: " << node_list(J) << "\n"
       << "w=" << format_word(group.canonical_word(w)) << "  l(w)=" << w.length() << "\n"
       << "u^J=" << format_word(up) << "  u_J=" << format_word(down) << "\n"
       << "l(u^J)=" << d.up.length() << "  l(u_J)=" << d.down.length() << "\n"
       << "c^J=" << c.up << "  c_J=" << c.down << "  c=" << c.total << "\n"
       << "dec=" << format_word(dec) << "\n";
    return {kOk, os.str(), ""};
  });
}

Output cmd_morphism(const CliConfig& cfg) {
  return guarded([&]() -> Output {
    const MorphismSource source = MorphismSource::parse(cfg.source);
    const MarkedDiagram target = MarkedDiagram::parse_pair(cfg.target);
    const MorphismVerdict v = morphism_constancy(source, target, cfg.engine);
    const std::string verdict = v.constant ? "constant" : "inconclusive";
    if (cfg.json) {
      json j{{"source", source.str()},      {"target", target.str()},
             {"verdict", verdict},          {"source_ed", v.source_ed},
             {"target_ed", v.target_ed},    {"subdiagram_rule", v.subdiagram_rule},
             {"reason", v.reason}};
      return {kOk, dump(j), ""};
    }
    std::ostringstream os;
    os << "source: " << source.str() << "\n"
       << "target: " << target.str() << "\n"
       << verdict << " (" << v.source_ed << (v.source_ed > v.target_ed ? " > " : " <= ") << v.target_ed << ")"
       << (v.subdiagram_rule ? " [proper subdiagram]" : "") << "\n"
       << "reason: " << v.reason << "\n";
    return {kOk, os.str(), ""};
  });
}

Output cmd_strata(const CliConfig& cfg) {
  return guarded([&]() -> Output {
    const DynkinSpec spec = DynkinSpec::parse(cfg.diagram);
    const NodeSet J = NodeSet::parse(cfg.parabolic, spec.rank);
    const WeylGroup group(spec);
    const LengthStrata strata = quotient_strata(group, J, cfg.engine.budget);
    if (cfg.length > strata.max_length())
      throw Error(ErrorKind::LengthOutOfRange, "length beyond " + std::to_string(strata.max_length()));
    json j{{"diagram", spec.name()}, {"J", J.str()}, {"total", strata.total()}};
    std::ostringstream os;
    os << "diagram: " << spec.name() << "\nJ: " << node_list(J) << "\ntotal: " << strata.total()
       << "\n";
    for (int l = 0; l <= strata.max_length(); ++l) {
      if (cfg.length >= 0 && l != cfg.length) continue;
      os << "length " << l << ": " << strata.at(l).size() << "\n";
      json words = json::array();
      for (const auto& w : strata.at(l)) {
        const std::string s = format_word(group.canonical_word(w));
        words.push_back(s);
        os << "  [" << s << "]\n";
      }
      j["strata"][std::to_string(l)] = words;
    }
    return {kOk, cfg.json ? dump(j) : os.str(), ""};
  });
}

Output cmd_coxeter(const CliConfig& cfg) {
  return guarded([&]() -> Output {
    const DynkinSpec spec = DynkinSpec::parse(cfg.diagram);
    const WeylGroup group(spec);
    if (cfg.json) {
      json j{{"diagram", spec.name()},
             {"coxeter_number", group.coxeter_number()},
             {"positive_roots", group.num_positive_roots()}};
      return {kOk, dump(j), ""};
    }
    return {kOk,
            "diagram: " + spec.name() + "\ncoxeter_number: " + std::to_string(group.coxeter_number()) +
                "\npositive_roots: " + std::to_string(group.num_positive_roots()) + "\n",
            ""};
  });
}

Output run(const std::vector<std::string>& args) {
  CLI::App app{"Effective good divisibility of rational homogeneous varieties"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto engine_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--workers", cfg.engine.workers, "sweep worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.engine.budget, "quotient element budget")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--extended", cfg.engine.extended, "allow E6 flag and E7/E8 sweeps");
  };

  auto* ed = app.add_subcommand("ed", "effective good divisibility of D(R)");
  ed->add_option("diagram", cfg.diagram)->required();
  ed->add_option("marked", cfg.marked, "marked nodes R: list, all")->required();
  ed->add_option("--mode", cfg.mode)->check(CLI::IsMember({"closed", "brute", "both"}));
  engine_flags(ed);

  auto* md = app.add_subcommand("mdpairs", "maximal disjoint pairs of Schubert cycles");
  md->add_option("diagram", cfg.diagram)->required();
  md->add_option("marked", cfg.marked)->required();
  md->add_flag("--classify", cfg.classify, "print pullback tags");
  engine_flags(md);

  auto* dec = app.add_subcommand("decompose", "parabolic decomposition w = w^J w_J");
  dec->add_option("diagram", cfg.diagram)->required();
  dec->add_option("word", cfg.word)->required();
  dec->add_option("J", cfg.parabolic, "parabolic set J: list, all, none")->required();
  dec->add_flag("--json", cfg.json);

  auto* mo = app.add_subcommand("morphism", "constancy of morphisms source -> target");
  mo->add_option("source", cfg.source, "<diagram>:<marked> or ed=<value>")->required();
  mo->add_option("target", cfg.target, "<diagram>:<marked>")->required();
  engine_flags(mo);

  auto* st = app.add_subcommand("strata", "dump the length strata of W^J");
  st->add_option("diagram", cfg.diagram)->required();
  st->add_option("J", cfg.parabolic)->required();
  st->add_option("--length", cfg.length);
  engine_flags(st);

  auto* cx = app.add_subcommand("coxeter", "Coxeter number and root count");
  cx->add_option("diagram", cfg.diagram)->required();
  cx->add_flag("--json", cfg.json);

  std::vector<std::string> storage{"egd"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n" + app.help()};
  }

  if (ed->parsed()) return cmd_ed(cfg);
  if (md->parsed()) return cmd_mdpairs(cfg);
  if (dec->parsed()) return cmd_decompose(cfg);
  if (mo->parsed()) return cmd_morphism(cfg);
  if (st->parsed()) return cmd_strata(cfg);
  return cmd_coxeter(cfg);
}

}  // namespace egd::cli
