// motive-forge: exact symbolic calculator for Weyl group combinatorics,
// Tate-sum decompositions of flag varieties and cellular fibrations,
// wonderful-compactification orbit data, and Grothendieck-ring classes.
//
// Exit codes: 0 success, 1 computation error (caps, overflow, violated
// contracts), 2 usage error. JSON mode emits exactly one document on stdout;
// identical invocations produce byte-identical output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "motive/motive.hpp"

namespace {

using namespace motive;

struct Common {
  bool json = false;
  std::string out_path;
  std::int64_t weyl_cap = default_weyl_cap;
  std::int64_t cell_cap = default_cell_cap;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "emit a single JSON document");
  cmd->add_option("--out", c.out_path, "write output to a file instead of stdout");
  cmd->add_option("--cap", c.weyl_cap, "Weyl enumeration cap in elements (default 1000000)")
      ->envname("MOTIVE_FORGE_CAP");
  cmd->add_option("--cell-cap", c.cell_cap, "cell evaluation budget in entries (default 10000000)");
}

void deliver(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + c.out_path);
    f << text;
  }
}

CellInterpretation parse_interpretation(const std::string& s) {
  if (s == "ascent") return CellInterpretation::ascent;
  if (s == "support") return CellInterpretation::support;
  throw UsageError("interpretation must be 'ascent' or 'support', got '" + s + "'");
}

TateSum parse_tate_arg(const std::string& s) {
  if (s == "Z") return TateSum::unit();
  return decode_tate_sum(nlohmann::json::parse(s));
}

LPolynomial parse_lpoly_arg(const std::string& s) {
  if (s == "1") return LPolynomial::constant(1);
  return decode_lpolynomial(nlohmann::json::parse(s));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  if (!text.empty() && text.back() == ',') {
    throw UsageError("trailing comma in integer list '" + text + "'");
  }
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(pos, end - pos);
    if (token.empty()) throw UsageError("empty entry in integer list '" + text + "'");
    std::int64_t value = 0;
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw UsageError("cannot parse integer list entry '" + token + "'");
      }
      value = checked_mul(value, 10);
      value = checked_add(value, ch - '0');
    }
    out.push_back(value);
    pos = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

// A fiber is either an explicit rank vector "1,1,1" or a flag spec "A2/1,2"
// (subset optional: "A2" is the full flag variety).
FiberData parse_fiber_spec(const std::string& spec, std::int64_t weyl_cap) {
  if (spec.empty()) throw UsageError("empty fiber spec");
  if (std::isdigit(static_cast<unsigned char>(spec[0]))) {
    return FiberData::make(parse_int_list(spec));
  }
  const std::size_t slash = spec.find('/');
  const std::string type_str = spec.substr(0, slash);
  const std::string subset_str = slash == std::string::npos ? "" : spec.substr(slash + 1);
  const RootSystem rs = RootSystem::build(CartanType::parse(type_str));
  const WeylGroup W = WeylGroup::enumerate(rs, weyl_cap);
  return FiberData::from_flag(W, ParabolicSubset::parse(subset_str, rs.rank()));
}

std::string word_display(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(w.word[i]);
  }
  return s;
}

nlohmann::json word_json(const WeylElement& w) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : w.word) out.push_back(i);
  return out;
}

template <typename T>
std::string join_ints(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

template <typename T>
nlohmann::json int_array(const std::vector<T>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const T& x : v) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// weyl

struct WeylOpts {
  Common common;
  std::string type;
  std::string parabolic;
  CLI::Option* parabolic_opt = nullptr;
};

void run_weyl(const WeylOpts& o) {
  const RootSystem rs = RootSystem::build(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.common.weyl_cap);
  const bool has_parabolic = o.parabolic_opt != nullptr && o.parabolic_opt->count() > 0;

  nlohmann::json body;
  std::ostringstream text;
  body["type"] = rs.type()->to_string();
  body["rank"] = rs.rank();
  body["order"] = W.order();
  body["num_positive"] = rs.num_positive();
  body["exponents"] = int_array(rs.exponents());
  body["poincare"] = encode(W.poincare());
  body["longest"] = nlohmann::json{{"word", word_json(W.longest())}, {"length", W.longest().length}};
  text << "type: " << rs.type()->to_string() << "\n";
  text << "weyl order: " << W.order() << "\n";
  text << "positive roots: " << rs.num_positive() << "\n";
  text << "exponents: " << join_ints(rs.exponents()) << "\n";
  text << "poincare: " << W.poincare().to_string('t') << "\n";
  text << "longest word: " << word_display(W.longest()) << " (length " << W.longest().length << ")\n";

  if (has_parabolic) {
    const ParabolicSubset I = ParabolicSubset::parse(o.parabolic, rs.rank());
    const std::vector<WeylElement> reps = W.minimal_coset_reps(I);
    const WeylGroup levi_W = WeylGroup::enumerate(levi_subsystem(rs, I), o.common.weyl_cap);
    const LPolynomial length_gf = length_generating_function(reps);
    const bool factorization_ok = length_gf * levi_W.poincare() == W.poincare();
    body["parabolic"] = nlohmann::json{{"indices", int_array(I.indices())},
                                       {"coset_count", static_cast<std::int64_t>(reps.size())},
                                       {"length_gf", encode(length_gf)},
                                       {"levi_order", levi_W.order()},
                                       {"factorization_ok", factorization_ok}};
    text << "parabolic: " << I.to_string() << "\n";
    text << "levi order: " << levi_W.order() << "\n";
    text << "coset count: " << reps.size() << "\n";
    text << "coset length gf: " << length_gf.to_string('t') << "\n";
    text << "factorization: " << (factorization_ok ? "ok" : "FAILED") << "\n";
  }
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

// ---------------------------------------------------------------------------
// flag

struct FlagOpts {
  Common common;
  std::string type;
  std::string parabolic;
};

void run_flag(const FlagOpts& o) {
  const RootSystem rs = RootSystem::build(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.common.weyl_cap);
  const ParabolicSubset I = ParabolicSubset::parse(o.parabolic, rs.rank());
  const TateSum motive = flag_motive(W, I);
  const RootSystem levi = levi_subsystem(rs, I);
  const int dim = rs.num_positive() - levi.num_positive();
  const bool self_dual = motive.self_duality_check(dim);

  nlohmann::json body;
  body["type"] = rs.type()->to_string();
  body["parabolic"] = int_array(I.indices());
  body["motive"] = encode(motive);
  body["chow_ranks"] = int_array(motive.pure_coefficients());
  body["dimension"] = dim;
  body["self_dual"] = self_dual;

  std::ostringstream text;
  text << "flag variety: " << rs.type()->to_string() << "/P" << I.to_string() << "\n";
  text << "dimension: " << dim << "\n";
  text << "motive: " << motive.to_string() << "\n";
  text << "chow ranks: " << join_ints(motive.pure_coefficients()) << "\n";
  text << "self-duality: " << (self_dual ? "ok" : "FAILED") << "\n";
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

// ---------------------------------------------------------------------------
// wonderful

struct WonderfulOpts {
  Common common;
  std::string type;
  std::string face;
  CLI::Option* face_opt = nullptr;
  std::string interpretation = "ascent";
  bool oracle = false;
  bool check_duality = false;
  bool lattice = false;
};

void run_wonderful(const WonderfulOpts& o) {
  const RootSystem rs = RootSystem::build(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.common.weyl_cap);
  const CellInterpretation interp = parse_interpretation(o.interpretation);
  const bool has_face = o.face_opt != nullptr && o.face_opt->count() > 0;
  const ParabolicSubset I =
      has_face ? ParabolicSubset::parse(o.face, rs.rank()) : ParabolicSubset::full(rs.rank());
  const Face face = face_of(rs, I);

  const CellTable table = orbit_closure_cells(W, I, interp, o.common.cell_cap);
  const std::vector<std::int64_t> hist = table.histogram();
  const TateSum motive = TateSum::from_chow_ranks(hist);
  const LPolynomial closure_cls = motive.euler_class();
  const LPolynomial orbit_cls = orbit_class(W, I, interp, o.common.cell_cap);

  nlohmann::json body;
  body["type"] = rs.type()->to_string();
  body["face"] = encode(face);
  body["interpretation"] = name(interp);
  body["histogram"] = int_array(hist);
  body["cells"] = static_cast<std::int64_t>(table.size());
  body["motive"] = encode(motive);
  body["closure_class"] = encode(closure_cls);
  body["orbit_class"] = encode(orbit_cls);

  std::ostringstream text;
  text << "type: " << rs.type()->to_string() << "\n";
  text << "face: " << I.to_string() << " (dim " << face.dim << ", codim " << face.codim << ")\n";
  text << "interpretation: " << name(interp) << "\n";
  text << "cells: " << table.size() << "\n";
  text << "cell histogram: " << join_ints(hist) << "\n";
  text << "motive: " << motive.to_string() << "\n";
  text << "closure class: " << closure_cls.to_string() << "\n";
  text << "orbit class: " << orbit_cls.to_string() << "\n";

  if (o.oracle) {
    const LPolynomial oracle_cls = orbit_class_oracle(W, I, o.common.weyl_cap);
    const bool match = oracle_cls == orbit_cls;
    body["oracle"] = nlohmann::json{{"class", encode(oracle_cls)}, {"match", match}};
    text << "oracle class: " << oracle_cls.to_string() << "\n";
    text << "oracle match: " << (match ? "ok" : "MISMATCH") << "\n";
  }
  if (o.check_duality) {
    const bool ok = motive.self_duality_check(face.dim);
    body["duality"] = nlohmann::json{{"n", face.dim}, {"ok", ok}};
    text << "self-duality (n=" << face.dim << "): " << (ok ? "ok" : "FAILED") << "\n";
  }
  if (o.lattice) {
    nlohmann::json faces = nlohmann::json::array();
    for (const Face& f : face_lattice(rs)) faces.push_back(encode(f));
    body["faces"] = std::move(faces);
    text << "face lattice:\n";
    for (const Face& f : face_lattice(rs)) {
      text << "  " << f.subset.to_string() << " dim " << f.dim << " codim " << f.codim << "\n";
    }
  }
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

// ---------------------------------------------------------------------------
// group-class

struct GroupClassOpts {
  Common common;
  std::string type;
  int central_rank = 0;
};

void run_group_class(const GroupClassOpts& o) {
  const RootSystem rs = RootSystem::build(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.common.weyl_cap);
  const LPolynomial cls = reductive_group_class(W, o.central_rank);

  nlohmann::json body;
  body["type"] = rs.type()->to_string();
  body["central_rank"] = o.central_rank;
  body["class"] = encode(cls);

  std::ostringstream text;
  text << "type: " << rs.type()->to_string() << "\n";
  text << "central torus rank: " << o.central_rank << "\n";
  text << "class: " << cls.to_string() << "\n";
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

// ---------------------------------------------------------------------------
// leray-hirsch and tower

struct LerayOpts {
  Common common;
  std::string fiber;
  std::string base = "Z";
};

void run_leray(const LerayOpts& o) {
  const FiberData fiber = parse_fiber_spec(o.fiber, o.common.weyl_cap);
  const TateSum base = parse_tate_arg(o.base);
  const TateSum motive = leray_hirsch(fiber, base);

  nlohmann::json body;
  body["fiber_ranks"] = int_array(fiber.chow_ranks);
  body["base"] = encode(base);
  body["motive"] = encode(motive);

  std::ostringstream text;
  text << "fiber chow ranks: " << join_ints(fiber.chow_ranks) << "\n";
  text << "base: " << base.to_string() << "\n";
  text << "motive: " << motive.to_string() << "\n";
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

struct TowerOpts {
  Common common;
  std::vector<std::string> fibers;
  std::string base = "Z";
};

void run_tower(const TowerOpts& o) {
  std::vector<FiberData> fibers;
  for (const std::string& spec : o.fibers) fibers.push_back(parse_fiber_spec(spec, o.common.weyl_cap));
  const TateSum base = parse_tate_arg(o.base);
  const TateSum motive = tower_motive(fibers, base);
  const char* note =
      "ambient tower object; the motive being resolved is a direct summand of it";

  nlohmann::json body;
  nlohmann::json ranks = nlohmann::json::array();
  for (const FiberData& f : fibers) ranks.push_back(int_array(f.chow_ranks));
  body["fiber_ranks"] = std::move(ranks);
  body["base"] = encode(base);
  body["motive"] = encode(motive);
  body["note"] = note;

  std::ostringstream text;
  text << "fibers: " << fibers.size() << "\n";
  for (const FiberData& f : fibers) text << "  ranks: " << join_ints(f.chow_ranks) << "\n";
  text << "base: " << base.to_string() << "\n";
  text << "motive: " << motive.to_string() << "\n";
  text << "note: " << note << "\n";
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

// ---------------------------------------------------------------------------
// filtration

struct FiltrationOpts {
  Common common;
  std::string type;
  std::string base = "1";
  std::string interpretation = "ascent";
};

void print_filtration_node(std::ostream& out, const FiltrationNode& node, int depth) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << "face " << node.face.subset.to_string() << " (dim " << node.face.dim
      << "): middle = " << node.middle.to_string() << "; left = " << node.left.to_string()
      << "; right = " << node.right.to_string() << "; ok\n";
  for (const FiltrationNode& child : node.children) print_filtration_node(out, child, depth + 1);
}

void run_filtration(const FiltrationOpts& o) {
  const RootSystem rs = RootSystem::build(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.common.weyl_cap);
  const LPolynomial base = parse_lpoly_arg(o.base);
  const FiltrationNode root =
      nested_filtration_report(W, base, parse_interpretation(o.interpretation), o.common.cell_cap);

  nlohmann::json body;
  body["type"] = rs.type()->to_string();
  body["base"] = encode(base);
  body["root"] = encode(root);

  std::ostringstream text;
  text << "nested filtration for " << rs.type()->to_string() << " with base " << base.to_string()
       << "\n";
  print_filtration_node(text, root, 0);
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

// ---------------------------------------------------------------------------
// config

struct ConfigOpts {
  Common common;
  std::string path;
  bool validate_only = false;
};

void run_config(const ConfigOpts& o) {
  std::string content;
  if (o.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    content = ss.str();
  } else {
    std::ifstream f(o.path, std::ios::binary);
    if (!f) throw UsageError("cannot open configuration file " + o.path);
    std::ostringstream ss;
    ss << f.rdbuf();
    content = ss.str();
  }
  const Configuration config = decode_configuration(nlohmann::json::parse(content));
  const ConfigurationReport report = validate_configuration(config);

  nlohmann::json body;
  body["components"] = config.component_count();
  body["valid"] = report.valid;
  nlohmann::json violations = nlohmann::json::array();
  for (const std::string& v : report.violations) violations.push_back(v);
  body["violations"] = std::move(violations);

  std::ostringstream text;
  text << "components: " << config.component_count() << "\n";
  text << "valid: " << (report.valid ? "yes" : "no") << "\n";
  for (const std::string& v : report.violations) text << "violation: " << v << "\n";

  if (report.valid && !o.validate_only) {
    const LPolynomial cls = union_class(config);
    body["union_class"] = encode(cls);
    text << "union class: " << cls.to_string() << "\n";
  }
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
  if (!report.valid && !o.validate_only) {
    throw DomainError("configuration is invalid; see the report");
  }
}

// ---------------------------------------------------------------------------
// torus-filtration

struct TorusOpts {
  Common common;
  int rank = 0;
  std::string base = "Z";
};

void run_torus(const TorusOpts& o) {
  const TateSum base = parse_tate_arg(o.base);
  const TorusFiltration filt = torus_filtration_pieces(o.rank, base);

  // Alternating Euler identity Sum_p C(r,p)(-L)^p = (1-L)^r.
  LPolynomial alternating;
  std::int64_t total_rank = 0;
  for (const TorusFiltrationPiece& piece : filt.pieces) {
    const std::int64_t sign = piece.p % 2 == 0 ? 1 : -1;
    alternating = alternating + LPolynomial::monomial(piece.p, checked_mul(sign, piece.rank));
    total_rank = checked_add(total_rank, piece.rank);
  }
  const LPolynomial expected =
      (LPolynomial::constant(1) - LPolynomial::lefschetz()).pow(o.rank);
  const bool identity_ok = alternating == expected;

  nlohmann::json body = encode(filt);
  body["alternating_identity_ok"] = identity_ok;
  body["total_rank"] = total_rank;
  body["base"] = encode(base);

  std::ostringstream text;
  text << "torus rank: " << o.rank << "\n";
  for (const TorusFiltrationPiece& piece : filt.pieces) {
    text << "piece " << piece.p << ": rank " << piece.rank << ", " << piece.piece.to_string()
         << "\n";
  }
  text << "alternating euler identity: " << (identity_ok ? "ok" : "FAILED") << "\n";
  text << "total slice rank: " << total_rank << "\n";
  deliver(o.common, o.common.json ? emit_document(std::move(body)) + "\n" : text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motive-forge: exact motivic decompositions and Grothendieck-ring classes\n"
               "for flag varieties, cellular fibrations and wonderful compactifications.\n"
               "Cartan types: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F4, G2 (C2 is\n"
               "normalized to B2). Parabolic subsets are comma-separated 1-based indices."};
  app.require_subcommand(1);

  WeylOpts weyl_opts;
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group order, exponents, Poincare polynomial");
  weyl_cmd->add_option("type", weyl_opts.type, "Cartan type, e.g. A2")->required();
  weyl_opts.parabolic_opt =
      weyl_cmd->add_option("--parabolic", weyl_opts.parabolic, "parabolic subset, e.g. 1,3");
  add_common(weyl_cmd, weyl_opts.common);
  weyl_cmd->callback([&] { run_weyl(weyl_opts); });

  FlagOpts flag_opts;
  auto* flag_cmd = app.add_subcommand("flag", "motive of the flag variety G/P_I");
  flag_cmd->add_option("type", flag_opts.type, "Cartan type, e.g. A2")->required();
  flag_cmd->add_option("--parabolic", flag_opts.parabolic,
                       "parabolic subset I (default empty: the full flag variety)");
  add_common(flag_cmd, flag_opts.common);
  flag_cmd->callback([&] { run_flag(flag_opts); });

  WonderfulOpts wonderful_opts;
  auto* wonderful_cmd =
      app.add_subcommand("wonderful", "orbit-closure cells, motives and classes in the "
                                      "wonderful compactification");
  wonderful_cmd->add_option("type", wonderful_opts.type, "Cartan type, e.g. A2")->required();
  wonderful_opts.face_opt = wonderful_cmd->add_option(
      "--face", wonderful_opts.face, "face subset I (default: the full set, i.e. the whole "
                                     "compactification; pass an empty string for the closed orbit)");
  wonderful_cmd->add_option("--interpretation", wonderful_opts.interpretation,
                            "I_u reading: ascent (default) or support");
  wonderful_cmd->add_flag("--oracle", wonderful_opts.oracle,
                          "cross-check the orbit class against the fibration oracle");
  wonderful_cmd->add_flag("--check-duality", wonderful_opts.check_duality,
                          "check Poincare duality of the closure motive");
  wonderful_cmd->add_flag("--lattice", wonderful_opts.lattice, "also list the face lattice");
  add_common(wonderful_cmd, wonderful_opts.common);
  wonderful_cmd->callback([&] { run_wonderful(wonderful_opts); });

  GroupClassOpts group_opts;
  auto* group_cmd =
      app.add_subcommand("group-class", "Grothendieck-ring class of a split reductive group");
  group_cmd->add_option("type", group_opts.type, "Cartan type of the semisimple part")->required();
  group_cmd->add_option("--central-rank", group_opts.central_rank,
                        "rank of the central torus (default 0: adjoint/semisimple)");
  add_common(group_cmd, group_opts.common);
  group_cmd->callback([&] { run_group_class(group_opts); });

  LerayOpts leray_opts;
  auto* leray_cmd = app.add_subcommand("leray-hirsch", "motive of a cellular fibration");
  leray_cmd->add_option("--fiber", leray_opts.fiber,
                        "fiber: rank vector '1,1,1' or flag spec 'A2/1'")
      ->required();
  leray_cmd->add_option("--base", leray_opts.base, "base Tate sum as JSON, or Z (default)");
  add_common(leray_cmd, leray_opts.common);
  leray_cmd->callback([&] { run_leray(leray_opts); });

  TowerOpts tower_opts;
  auto* tower_cmd = app.add_subcommand("tower", "ambient motive of a tower of cellular fibrations");
  tower_cmd->add_option("--fiber", tower_opts.fibers,
                        "fiber spec, repeatable; the rightmost fiber is applied first");
  tower_cmd->add_option("--base", tower_opts.base, "base Tate sum as JSON, or Z (default)");
  add_common(tower_cmd, tower_opts.common);
  tower_cmd->callback([&] { run_tower(tower_opts); });

  FiltrationOpts filtration_opts;
  auto* filtration_cmd = app.add_subcommand(
      "filtration", "nested face filtration of a compactified group bundle, with "
                    "class-level additivity checks");
  filtration_cmd->add_option("type", filtration_opts.type, "Cartan type, e.g. A2")->required();
  filtration_cmd->add_option("--base", filtration_opts.base,
                             "base class as LPolynomial JSON, or 1 (default)");
  filtration_cmd->add_option("--interpretation", filtration_opts.interpretation,
                             "I_u reading: ascent (default) or support");
  add_common(filtration_cmd, filtration_opts.common);
  filtration_cmd->callback([&] { run_filtration(filtration_opts); });

  ConfigOpts config_opts;
  auto* config_cmd =
      app.add_subcommand("config", "validate a configuration and compute its union class");
  config_cmd->add_option("path", config_opts.path, "configuration JSON file, or - for stdin")
      ->required();
  config_cmd->add_flag("--validate-only", config_opts.validate_only,
                       "only run validation; exit 0 even for invalid input");
  add_common(config_cmd, config_opts.common);
  config_cmd->callback([&] { run_config(config_opts); });

  TorusOpts torus_opts;
  auto* torus_cmd =
      app.add_subcommand("torus-filtration", "slice filtration pieces of a torus bundle");
  torus_cmd->add_option("rank", torus_opts.rank, "torus rank r >= 0")->required();
  torus_cmd->add_option("--base", torus_opts.base, "base Tate sum as JSON, or Z (default)");
  add_common(torus_cmd, torus_opts.common);
  torus_cmd->callback([&] { run_torus(torus_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << " (see motive-forge --help)\n";
    return 2;
  } catch (const motive::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "usage error: invalid JSON input: " << e.what() << "\n";
    return 2;
  } catch (const motive::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
