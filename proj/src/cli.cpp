#include "vtt/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "vtt/counting.hpp"
#include "vtt/enumeration.hpp"
#include "vtt/errors.hpp"
#include "vtt/fixtures.hpp"
#include "vtt/graph_io.hpp"
#include "vtt/search.hpp"

namespace vtt::cli {

namespace {

struct Config {
  std::string format;
  bool members = false;
  unsigned budget_bits = 30;
  std::size_t aut_cap = 16;
  unsigned workers = 1;
};

Residue parse_int(const std::string& text) {
  Residue value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw InvalidArgument("not an integer: '" + text + "'");
  return value;
}

Residue parse_prime(const std::string& text) {
  const Residue p = parse_int(text);
  if (!is_odd_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  return p;
}

std::string format_or(const Config& cfg, const char* fallback) { return cfg.format.empty() ? fallback : cfg.format; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InvalidArgument("unsupported --format '" + format + "' for this command");
}

std::string residue_list(const std::vector<Residue>& xs, const char* open = "[", const char* close = "]") {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << close;
  return os.str();
}

std::string element_list(const ConnectionSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    const auto& c = s.members()[i].coords;
    os << (i ? ", " : "");
    if (c.size() == 1) {
      os << c[0];
    } else {
      os << residue_list(c, "(", ")");
    }
  }
  os << '}';
  return os.str();
}

// ---- count -----------------------------------------------------------------

int cmd_count(const std::string& input, const Config& cfg, std::ostream& out) {
  const std::string format = format_or(cfg, "tsv");
  require_format(format, {"tsv", "text", "json"});
  std::vector<CountRow> rows;
  if (auto dots = input.find(".."); dots != std::string::npos) {
    rows = count_table(parse_int(input.substr(0, dots)), parse_int(input.substr(dots + 2)));
  } else {
    const Residue p = parse_prime(input);
    rows = count_table(p, p);
  }
  out << (format == "json" ? count_table_json(rows) : count_table_tsv(rows));
  return kOk;
}

// ---- classes ---------------------------------------------------------------

int cmd_classes(const std::string& input, const Config& cfg, std::ostream& out) {
  const std::string format = format_or(cfg, "json");
  require_format(format, {"json", "text"});
  const Residue p = parse_prime(input);
  EnumerationOptions options{cfg.budget_bits, cfg.workers, cfg.members};
  const auto report = equivalence_classes(p, options);
  for (const auto& cls : report.classes) {
    if (format == "json") {
      out << "{\"p\":" << p << ",\"rep\":" << residue_list(decode(cls.representative)) << ",\"size\":" << cls.size;
      if (cfg.members) {
        out << ",\"members\":[";
        for (std::size_t i = 0; i < cls.members.size(); ++i) out << (i ? "," : "") << residue_list(decode(cls.members[i]));
        out << ']';
      }
      out << "}\n";
    } else {
      out << "rep=" << residue_list(decode(cls.representative), "{", "}") << " size=" << cls.size << '\n';
      for (const auto& m : cls.members) out << "  " << residue_list(decode(m), "{", "}") << '\n';
    }
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& input, const Config& cfg, std::ostream& out) {
  const std::string format = format_or(cfg, "text");
  require_format(format, {"text", "json"});
  const Residue p = parse_prime(input);
  const BigInt formula = class_count(p);
  const auto report = equivalence_classes(p, EnumerationOptions{cfg.budget_bits, cfg.workers, false});
  const BigInt enumerated = report.classes.size();
  const BigInt burnside = burnside_count(p);
  const bool ok = formula == enumerated && formula == burnside;
  if (format == "json") {
    out << "{\"p\":" << p << ",\"formula\":" << formula << ",\"enumeration\":" << enumerated
        << ",\"burnside\":" << burnside << ",\"ok\":" << (ok ? "true" : "false") << "}\n";
  } else {
    out << "formula=" << formula << " enumeration=" << enumerated << " burnside=" << burnside << ' '
        << (ok ? "OK" : "MISMATCH") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

// ---- recognize -------------------------------------------------------------

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read graph file '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

int cmd_recognize(const std::string& path, const Config& cfg, std::ostream& out) {
  const std::string format = format_or(cfg, "text");
  require_format(format, {"text", "json"});
  const Digraph g = parse_graph(read_input(path));
  SearchLimits limits;
  limits.aut_cap = cfg.aut_cap;
  const PermGroup aut = automorphisms(g, limits);
  const auto blocks = orbits(aut, g.order());
  const bool transitive = blocks.size() <= 1;
  const auto regular = find_regular_subgroup(aut);
  if (format == "json") {
    out << "{\"vertices\":" << g.order() << ",\"arcs\":" << g.arc_count() << ",\"automorphisms\":" << aut.order()
        << ",\"orbits\":" << blocks.size() << ",\"vertex_transitive\":" << (transitive ? "true" : "false")
        << ",\"cayley\":" << (regular ? "true" : "false") << ",\"regular_subgroup\":[";
    if (regular) {
      for (std::size_t i = 0; i < regular->elements().size(); ++i) {
        out << (i ? "," : "") << '"' << regular->elements()[i].cycle_notation() << '"';
      }
    }
    out << "]}\n";
  } else {
    out << "vertices: " << g.order() << '\n'
        << "arcs: " << g.arc_count() << '\n'
        << "automorphisms: " << aut.order() << '\n'
        << "orbits: " << blocks.size() << '\n'
        << "vertex-transitive: " << (transitive ? "yes" : "no") << ", cayley: " << (regular ? "yes" : "no") << '\n';
    if (regular) {
      out << "regular-subgroup:\n";
      for (const auto& x : regular->elements()) out << "  " << x.cycle_notation() << '\n';
    }
  }
  return kOk;
}

// ---- fixtures --------------------------------------------------------------

int cmd_fixtures(const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = format_or(cfg, "text");
  require_format(format, {"text", "json"});
  const auto a = run_z25_check();
  const auto b = run_triangle_check();
  const auto c = run_cyclic_partner_check();

  if (format == "json") {
    out << "{\"check\":\"a\",\"units_tried\":" << a.units_tried.size() << ",\"candidates\":" << residue_list(a.candidates)
        << ",\"multipliers\":" << residue_list(a.multipliers)
        << ",\"s_isomorphic_to_wreath\":" << (a.s_to_wreath ? "true" : "false")
        << ",\"s_prime_isomorphic_to_wreath\":" << (a.s_prime_to_wreath ? "true" : "false")
        << ",\"ok\":" << (a.passed() ? "true" : "false") << "}\n";
    out << "{\"check\":\"b\",\"z9_max\":" << b.z9_max << ",\"z9_witness\":[" << b.z9_witness.first << ','
        << b.z9_witness.second << "],\"z3sq_max\":" << b.z3sq_max
        << ",\"isomorphic\":" << (b.isomorphism ? "true" : "false") << ",\"ok\":" << (b.passed() ? "true" : "false")
        << "}\n";
    out << "{\"check\":\"c\",\"candidates_tried\":" << c.candidates_tried << ",\"partners\":" << c.partners.size()
        << ",\"z9_partner\":";
    if (c.z9_partner) {
      std::vector<Residue> xs;
      for (const auto& x : c.z9_partner->members()) xs.push_back(x.coords[0]);
      out << residue_list(xs) << ",\"permutation\":\"" << c.isomorphism->cycle_notation() << '"';
    } else {
      out << "null";
    }
    out << ",\"ok\":" << (c.passed() ? "true" : "false") << "}\n";
  } else {
    out << "(a) Z25 S=" << element_list(z25_set()) << " S'=" << element_list(z25_set_prime()) << '\n'
        << "    units tried: " << a.units_tried.size() << ", candidates a in S' (a = a*1): "
        << residue_list(a.candidates, "{", "}") << ", multipliers with aS = S': "
        << (a.multipliers.empty() ? std::string("none") : residue_list(a.multipliers, "{", "}")) << '\n'
        << "    Cay(Z25,S) ~ C5 wr C5: " << (a.s_to_wreath ? "yes" : "no")
        << ", Cay(Z25,S') ~ C5 wr C5: " << (a.s_prime_to_wreath ? "yes" : "no") << '\n'
        << "    " << (a.passed() ? "no unit multiplier; graphs isomorphic  OK" : "FAILED") << '\n';
    out << "(b) Z9 S=" << element_list(z9_set()) << " vs Z3xZ3 S'=" << element_list(z3sq_set()) << '\n'
        << "    max directed triangles through an arc: Z9 " << b.z9_max << " at (" << b.z9_witness.first << ','
        << b.z9_witness.second << "), Z3xZ3 " << b.z3sq_max << '\n'
        << "    " << (b.passed() ? "counts 4 vs <4; non-isomorphic  OK" : "FAILED") << '\n';
    out << "(c) Cayley tournaments on Z9 tried: " << c.candidates_tried << ", isomorphic to Cay(Z3xZ3,S'): "
        << c.partners.size() << '\n';
    if (c.passed()) {
      out << "    Z9 set " << element_list(*c.z9_partner) << " is isomorphic to Cay(Z3xZ3,S') via "
          << c.isomorphism->cycle_notation() << '\n'
          << "    OK\n";
    } else {
      out << "    FAILED: no Z9 Cayley tournament is isomorphic to Cay(Z3xZ3,S')\n";
    }
  }

  int code = kOk;
  if (!a.passed()) {
    err << "fixture (a) failed\n";
    code = kVerificationFailed;
  }
  if (!b.passed()) {
    err << "fixture (b) failed\n";
    code = kVerificationFailed;
  }
  if (!c.passed()) {
    err << "fixture (c) failed\n";
    code = kVerificationFailed;
  }
  return code;
}

// ---- export ----------------------------------------------------------------

Digraph build_family(const std::vector<std::string>& words) {
  if (words.empty()) throw InvalidArgument("export needs a graph family");
  const std::string& family = words[0];
  auto arg = [&](std::size_t i) {
    if (i >= words.size()) throw InvalidArgument("export " + family + ": missing argument");
    return parse_int(words[i]);
  };
  auto size_arg = [&](std::size_t i) {
    const Residue v = arg(i);
    if (v < 0) throw InvalidArgument("export " + family + ": arguments must be non-negative");
    return static_cast<std::size_t>(v);
  };
  if (family == "petersen") return petersen();
  if (family == "cycle") return cycle(size_arg(1));
  if (family == "cube") return k_cube(size_arg(1));
  if (family == "kneser") return kneser(size_arg(1), size_arg(2), size_arg(3));
  if (family == "cayley") {
    const Residue n = arg(1);
    std::vector<Residue> members;
    for (std::size_t i = 2; i < words.size(); ++i) members.push_back(parse_int(words[i]));
    return cayley_digraph(ConnectionSet::cyclic(n, members));
  }
  if (family == "tournament") {
    const Residue p = parse_prime(words.size() > 1 ? words[1] : "");
    const Residue bits = arg(2);
    if (bits < 0 || (p - 1) / 2 >= 63 || bits >= (Residue{1} << ((p - 1) / 2))) {
      throw InvalidArgument("mask out of range for p = " + std::to_string(p));
    }
    return cayley_digraph(to_connection_set(SetMask{p, static_cast<std::uint64_t>(bits)}));
  }
  throw InvalidArgument("unknown graph family '" + family + "'");
}

int cmd_export(const std::vector<std::string>& words, const Config& cfg, std::ostream& out) {
  const std::string format = format_or(cfg, "graph");
  const Digraph g = build_family(words);
  if (format == "graph") {
    out << to_graph_file(g);
  } else {
    out << export_graph(g, parse_graph_format(format));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-transitive tournaments of prime order: counting, enumeration and recognition", "vtt"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--format", cfg.format, "Output format: tsv|json|text (count), json|text (classes), "
                                         "text|json (verify, recognize, fixtures), graph|edge-list|dot|json (export)")
      ->envname("VTT_FORMAT");
  app.add_flag("--members", cfg.members, "List every member of each class (classes)")->envname("VTT_MEMBERS");
  app.add_option("--budget-bits", cfg.budget_bits, "Largest (p-1)/2 enumerated explicitly")
      ->envname("VTT_BUDGET_BITS")
      ->check(CLI::Range(1u, 32u));
  app.add_option("--aut-cap", cfg.aut_cap, "Largest vertex count for automorphism enumeration")
      ->envname("VTT_AUT_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Worker threads for class enumeration")
      ->envname("VTT_WORKERS")
      ->check(CLI::Range(1u, 256u));

  std::string target;
  std::vector<std::string> family;
  auto* count = app.add_subcommand("count", "Class count for a prime p or every odd prime in a..b");
  count->add_option("p", target, "p or a..b")->required();
  auto* classes = app.add_subcommand("classes", "Enumerate the classes of tournament sets on Z_p (JSON lines)");
  classes->add_option("p", target, "odd prime")->required();
  auto* verify = app.add_subcommand("verify", "Compare formula, explicit enumeration and Burnside counts");
  verify->add_option("p", target, "odd prime")->required();
  auto* recognize = app.add_subcommand("recognize", "Vertex-transitivity and Cayley recognition for a graph file");
  recognize->add_option("file", target, "graph file ('digraph N' / 'graph N' header + edge list, or JSON); - for stdin")
      ->required();
  auto* fixtures = app.add_subcommand("fixtures", "Run the Z25, Z9 vs Z3xZ3 and Z9-partner checks");
  auto* exporter = app.add_subcommand(
      "export", "Write a graph: petersen | cycle N | cube K | kneser V K I | cayley N s... | tournament P MASK");
  exporter->add_option("family", family, "family and its arguments")->required()->expected(1, -1);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*count) return cmd_count(target, cfg, out);
    if (*classes) return cmd_classes(target, cfg, out);
    if (*verify) return cmd_verify(target, cfg, out);
    if (*recognize) return cmd_recognize(target, cfg, out);
    if (*fixtures) return cmd_fixtures(cfg, out, err);
    if (*exporter) return cmd_export(family, cfg, out);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kBadInput;
}

}  // namespace vtt::cli
