#include "rookdual/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "rookdual/actions.hpp"
#include "rookdual/dualities.hpp"
#include "rookdual/linalg.hpp"
#include "rookdual/morphisms.hpp"
#include "rookdual/notation.hpp"
#include "rookdual/semigroups.hpp"

namespace rookdual::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string format = "text";
  std::string out_path;
  bool unsafe = false;

  std::string semigroup;
  int n = 0;
  int k = 0;
  std::string lhs;
  std::string rhs;
  std::string element;
  std::string space = "V";
  std::string variant = "plain";
  std::string side = "left-is";
  bool basis = false;

  bool thm1 = false;
  bool thm2 = false;
  bool all = false;
  bool props = false;
  int max_n = 4;
  int max_k = 4;
};

// Raised for flag combinations CLI11 cannot express.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Guard guard_of(const Options& o) { return o.unsafe ? Guard::skip : Guard::enforce; }
bool json_out(const Options& o) { return o.format == "json"; }

Json header(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json triplets_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (const auto& [r, c, v] : m.triplets()) entries.push_back(Json::array({r, c, v.get_str()}));
  return entries;
}

void write_triplets(std::ostream& os, const ExactMatrix& m) {
  for (const auto& [r, c, v] : m.triplets()) os << r << ' ' << c << ' ' << v.get_str() << '\n';
}

int require_positive(int value, const char* flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be given as a positive integer");
  return value;
}

SpaceKind parse_space(const std::string& s) { return s == "U" ? SpaceKind::U : SpaceKind::V; }

// ---- enumerate -----------------------------------------------------------

void cmd_enumerate(const Options& o, std::ostream& os) {
  std::vector<std::string> elements;
  int degree;
  if (o.semigroup == "is") {
    degree = require_positive(o.n, "--n");
    for (const auto& pi : enumerate_is(degree, guard_of(o))) elements.push_back(format(pi));
  } else {
    degree = require_positive(o.k, "--k");
    auto list = o.semigroup == "istar" ? enumerate_istar(degree, guard_of(o)) : enumerate_pistar(degree, guard_of(o));
    for (const auto& p : list) elements.push_back(format(p));
  }
  if (json_out(o)) {
    Json j = header("enumerate");
    j["semigroup"] = o.semigroup;
    j["degree"] = degree;
    j["count"] = elements.size();
    j["elements"] = elements;
    os << j.dump(2) << '\n';
  } else {
    for (const auto& e : elements) os << e << '\n';
  }
}

// ---- multiply ------------------------------------------------------------

void cmd_multiply(const Options& o, std::ostream& os) {
  auto family = *family_from_name(o.semigroup);
  int degree = family == Family::is ? require_positive(o.n, "--n") : require_positive(o.k, "--k");
  auto a = parse_element(o.lhs, family, degree);
  auto b = parse_element(o.rhs, family, degree);
  std::string result;
  std::optional<std::size_t> garbage;
  switch (family) {
    case Family::is:
      result = format(compose(std::get<PartialInjection>(a), std::get<PartialInjection>(b)));
      break;
    case Family::istar:
      result = format(multiply_istar(std::get<SetPartition>(a), std::get<SetPartition>(b)));
      break;
    case Family::pistar:
      result = format(multiply_pistar(std::get<SetPartition>(a), std::get<SetPartition>(b)));
      break;
    case Family::hat:
      result = format(star_multiply(std::get<HatElement>(a), std::get<HatElement>(b)));
      break;
    case Family::tilde:
      result = format(bullet_multiply(std::get<SetPartition>(a), std::get<SetPartition>(b)));
      break;
    case Family::composition: {
      auto r = multiply_composition(std::get<SetPartition>(a).completed(), std::get<SetPartition>(b).completed());
      result = format(r.diagram);
      garbage = r.garbage_count;
      break;
    }
  }
  if (json_out(o)) {
    Json j = header("multiply");
    j["semigroup"] = o.semigroup;
    j["degree"] = degree;
    j["lhs"] = format(a);
    j["rhs"] = format(b);
    j["result"] = result;
    if (garbage) j["garbage"] = *garbage;
    os << j.dump(2) << '\n';
  } else {
    os << result;
    if (garbage) os << " garbage=" << *garbage;
    os << '\n';
  }
}

// ---- act -----------------------------------------------------------------

void cmd_act(const Options& o, std::ostream& os) {
  ActionSpace space(parse_space(o.space), require_positive(o.n, "--n"), require_positive(o.k, "--k"));
  auto guard = guard_of(o);
  ExactMatrix m;
  std::string shown;
  bool rook = o.element.find('[') != std::string::npos;
  if (rook) {
    if (o.variant != "plain") throw UsageError("IS_n elements only have the plain action");
    auto pi = parse_partial_injection(o.element, space.n());
    m = rook_action_matrix(pi, space, guard);
    shown = format(pi);
  } else if (space.kind() == SpaceKind::V) {
    if (o.variant != "plain") throw UsageError("--variant hat/tilde needs --space U");
    auto p = std::get<SetPartition>(parse_element(o.element, Family::composition, space.k()));
    m = action_matrix_v(p, space, guard);
    shown = format(p);
  } else if (o.variant == "hat") {
    auto a = std::get<HatElement>(parse_element(o.element, Family::hat, space.k()));
    m = action_matrix_u(a, space, guard);
    shown = format(a);
  } else {
    auto family = o.variant == "plain" ? Family::pistar : Family::tilde;
    auto p = std::get<SetPartition>(parse_element(o.element, family, space.k()));
    m = action_matrix_u(p, space, o.variant == "plain" ? UVariant::plain : UVariant::tilde, guard);
    shown = format(p);
  }
  if (json_out(o)) {
    Json j = header("action");
    j["space"] = o.space;
    j["variant"] = o.variant;
    j["n"] = space.n();
    j["k"] = space.k();
    j["element"] = shown;
    j["dimension"] = space.dimension();
    j["entries"] = triplets_json(m);
    os << j.dump(2) << '\n';
  } else {
    os << "# " << space.dimension() << 'x' << space.dimension() << " space=" << o.space << " n=" << space.n()
       << " k=" << space.k() << '\n';
    write_triplets(os, m);
  }
}

// ---- commutant -----------------------------------------------------------

void cmd_commutant(const Options& o, std::ostream& os) {
  int n = require_positive(o.n, "--n");
  int k = require_positive(o.k, "--k");
  auto kind = parse_space(o.space);
  if (kind == SpaceKind::V && o.side == "right-pistar") throw UsageError("--space V pairs with --side right-istar");
  if (kind == SpaceKind::U && o.side == "right-istar") throw UsageError("--space U pairs with --side right-pistar");
  auto guard = guard_of(o);
  ActionSpace space(kind, n, k);
  space.check_guard(guard);
  auto generators =
      o.side == "left-is" ? left_generator_images(n, k, kind, guard) : right_images(n, k, kind, guard);
  auto basis = commutant_basis(generators, space.dimension(), guard);
  if (json_out(o)) {
    Json j = header("commutant");
    j["space"] = o.space;
    j["side"] = o.side;
    j["n"] = n;
    j["k"] = k;
    j["dimension"] = basis.size();
    if (o.basis) {
      Json list = Json::array();
      for (const auto& b : basis) list.push_back(triplets_json(b));
      j["basis"] = list;
    }
    os << j.dump(2) << '\n';
  } else {
    os << "dimension " << basis.size() << '\n';
    if (o.basis) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        os << "# basis " << i << '\n';
        write_triplets(os, basis[i]);
      }
    }
  }
}

// ---- verify --------------------------------------------------------------

Json flags_json(const DualityFlags& f) {
  Json j;
  j["commute"] = f.commute;
  j["semigroup_faithful_left"] = f.semigroup_faithful_left;
  j["semigroup_faithful_right"] = f.semigroup_faithful_right;
  j["algebra_faithful_left"] = f.algebra_faithful_left;
  j["algebra_faithful_right"] = f.algebra_faithful_right;
  return j;
}

Json duality_json(const DualityReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["space"] = space_name(r.space);
  j["commute_ok"] = r.computed.commute;
  j["span_of_left"] = r.span_of_left;
  j["span_of_right"] = r.span_of_right;
  if (r.centralizer) {
    const auto& c = *r.centralizer;
    j["centralizer"] = {
        {"commutant_of_left", c.of_left.commutant_dim},
        {"span_of_right", c.of_left.span_dim},
        {"right_span_in_commutant", c.of_left.span_in_commutant},
        {"commutant_in_right_span", c.of_left.commutant_in_span},
        {"commutant_of_right", c.of_right.commutant_dim},
        {"span_of_left", c.of_right.span_dim},
        {"left_span_in_commutant", c.of_right.span_in_commutant},
        {"commutant_in_left_span", c.of_right.commutant_in_span},
    };
  } else {
    j["centralizer"] = nullptr;
  }
  j["computed"] = flags_json(r.computed);
  j["predicted"] = flags_json(r.predicted);
  j["match"] = r.match;
  return j;
}

Json morphism_json(const MorphismReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["map_name"] = morphism_name(r.map);
  j["pairs_checked"] = r.pairs_checked;
  j["homomorphism_ok"] = r.homomorphism_ok;
  j["inverse_ok"] = r.inverse_ok;
  Json checks = Json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"ok", ok}});
  j["checks"] = checks;
  j["match"] = r.all_ok();
  return j;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void write_duality_text(std::ostream& os, const DualityReport& r) {
  os << space_name(r.space) << " n=" << r.n << " k=" << r.k << " commute=" << yes(r.computed.commute)
     << " semigroup_faithful=" << yes(r.computed.semigroup_faithful_left) << '/'
     << yes(r.computed.semigroup_faithful_right) << " algebra_faithful=" << yes(r.computed.algebra_faithful_left)
     << '/' << yes(r.computed.algebra_faithful_right) << " spans=" << r.span_of_left << '/' << r.span_of_right;
  if (r.centralizer) {
    const auto& c = *r.centralizer;
    os << " commutants=" << c.of_left.commutant_dim << '/' << c.of_right.commutant_dim
       << " inclusions=" << yes(c.of_left.span_in_commutant && c.of_left.commutant_in_span) << '/'
       << yes(c.of_right.span_in_commutant && c.of_right.commutant_in_span);
  }
  os << " match=" << yes(r.match) << '\n';
}

void write_morphism_text(std::ostream& os, const MorphismReport& r) {
  os << morphism_name(r.map) << " n=" << r.n << " k=" << r.k << " pairs=" << r.pairs_checked
     << " match=" << yes(r.all_ok()) << '\n';
  for (const auto& [name, ok] : r.checks) os << "  " << (ok ? "ok   " : "FAIL ") << name << '\n';
}

bool cmd_verify(const Options& o, std::ostream& os, bool n_given, bool k_given) {
  bool thm1 = o.thm1 || o.all;
  bool thm2 = o.thm2 || o.all;
  bool props = o.props;
  if (!thm1 && !thm2 && !props) thm1 = thm2 = true;
  auto guard = guard_of(o);

  std::vector<DualityReport> dualities;
  for (const auto& cell : default_grid(o.max_n, o.max_k, thm1, thm2)) {
    dualities.push_back(run_report(cell.n, cell.k, cell.space, guard));
  }
  std::vector<MorphismReport> morphisms;
  if (props) {
    std::vector<std::pair<int, int>> cells;
    if (n_given || k_given) {
      cells.emplace_back(require_positive(o.n, "--n"), require_positive(o.k, "--k"));
    } else {
      for (auto [n, k] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}}) {
        if (n <= o.max_n && k <= o.max_k) cells.emplace_back(n, k);
      }
    }
    for (auto [n, k] : cells) {
      morphisms.push_back(verify_prop3(n, k, guard));
      morphisms.push_back(verify_prop4(n, k, guard));
    }
  }

  bool all_match = std::all_of(dualities.begin(), dualities.end(), [](const auto& r) { return r.match; }) &&
                   std::all_of(morphisms.begin(), morphisms.end(), [](const auto& r) { return r.all_ok(); });
  if (json_out(o)) {
    Json j = header("verify");
    Json d = Json::array();
    for (const auto& r : dualities) d.push_back(duality_json(r));
    Json m = Json::array();
    for (const auto& r : morphisms) m.push_back(morphism_json(r));
    j["duality_reports"] = d;
    j["morphism_reports"] = m;
    j["all_match"] = all_match;
    os << j.dump(2) << '\n';
  } else {
    for (const auto& r : dualities) write_duality_text(os, r);
    for (const auto& r : morphisms) write_morphism_text(os, r);
    os << (all_match ? "all checks match" : "MISMATCH") << '\n';
  }
  return all_match;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Diagram semigroups, their tensor actions, and exact duality checks", "rookdual"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out_path, "Write the result to this file");
  app.add_flag("--unsafe-no-guards", o.unsafe, "Disable size guards");

  auto* enumerate = app.add_subcommand("enumerate", "List every element of a semigroup");
  enumerate->add_option("--semigroup", o.semigroup)->required()->check(CLI::IsMember({"is", "istar", "pistar"}));
  enumerate->add_option("--n", o.n);
  enumerate->add_option("--k", o.k);

  auto* multiply = app.add_subcommand("multiply", "Multiply two elements");
  multiply->add_option("--semigroup", o.semigroup)
      ->required()
      ->check(CLI::IsMember({"is", "istar", "pistar", "hat", "tilde", "composition"}));
  multiply->add_option("--n", o.n);
  multiply->add_option("--k", o.k);
  multiply->add_option("lhs", o.lhs)->required();
  multiply->add_option("rhs", o.rhs)->required();

  auto* act = app.add_subcommand("act", "Print the action matrix of an element");
  act->add_option("--space", o.space)->check(CLI::IsMember({"V", "U"}));
  act->add_option("--variant", o.variant)->check(CLI::IsMember({"plain", "hat", "tilde"}));
  act->add_option("--n", o.n)->required();
  act->add_option("--k", o.k)->required();
  act->add_option("element", o.element)->required();

  auto* commutant = app.add_subcommand("commutant", "Basis of the commutant of one side");
  commutant->add_option("--space", o.space)->check(CLI::IsMember({"V", "U"}));
  commutant->add_option("--side", o.side)->check(CLI::IsMember({"left-is", "right-istar", "right-pistar"}));
  commutant->add_option("--n", o.n)->required();
  commutant->add_option("--k", o.k)->required();
  commutant->add_flag("--basis", o.basis, "Also print the basis");

  auto* verify = app.add_subcommand("verify", "Check the duality theorems and propositions");
  verify->add_flag("--thm1", o.thm1, "Theorem checks on V");
  verify->add_flag("--thm2", o.thm2, "Theorem checks on U");
  verify->add_flag("--all", o.all, "Both theorem grids");
  verify->add_flag("--props", o.props, "Proposition and morphism checks");
  verify->add_option("--max-n", o.max_n);
  verify->add_option("--max-k", o.max_k);
  auto* verify_n = verify->add_option("--n", o.n);
  auto* verify_k = verify->add_option("--k", o.k);

  std::vector<std::string> storage{"rookdual"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (enumerate->parsed()) {
      cmd_enumerate(o, buffer);
    } else if (multiply->parsed()) {
      cmd_multiply(o, buffer);
    } else if (act->parsed()) {
      cmd_act(o, buffer);
    } else if (commutant->parsed()) {
      cmd_commutant(o, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(o, buffer, verify_n->count() > 0, verify_k->count() > 0) ? 0 : kExitMismatch;
    }
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << " (use --unsafe-no-guards to override)\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return kExitBadInput;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace rookdual::cli
