#include "cli.hpp"

#include "cf/dsl.hpp"
#include "cf/error.hpp"
#include "cf/formula.hpp"
#include "cf/group.hpp"
#include "cf/json_io.hpp"
#include "cf/morphism.hpp"
#include "cf/quaternion_maps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cf::cli {

namespace {

using nlohmann::json;

// Figure quoted for the extended symmetry group of q8 in the source
// material; reported next to the computed count, never substituted for it.
constexpr std::size_t kClaimedQ8SymmetryOrder = 24;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string group;
  std::string file;
  std::string target;
  std::string target_file;
  std::string images;
  std::string map;
  std::string map_file;
  std::string maps;
  std::string variant;
  std::string formula;
  std::string assign;
  std::string pins;
  bool anti = false;
  bool relax = false;
  std::size_t steps = 6;
};

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep))
    parts.push_back(part);
  return parts;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i)
    text += (i ? sep : "") + parts[i];
  return text;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FiniteGroup resolve_group(const std::string &name, const std::string &file,
                          const char *what) {
  if (!file.empty())
    return load_group_file(file);
  if (!name.empty())
    return catalog_group(name);
  throw UsageError(std::string("no ") + what + " given (use --group or --file)");
}

FiniteGroup resolve_group(const Options &opts) {
  return resolve_group(opts.group, opts.file, "group");
}

CFVariant resolve_variant(const Options &opts) {
  if (!opts.formula.empty())
    return parse_formula(opts.formula);
  const std::string name = opts.variant.empty() ? "classic" : opts.variant;
  if (name.find("F_") != std::string::npos)
    return parse_formula(name);
  return builtin_variant(name);
}

std::array<std::optional<Element>, 4> parse_role_values(const std::string &text,
                                                        const FiniteGroup &group) {
  std::array<std::optional<Element>, 4> values;
  for (const auto &item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq != 1 || item.size() < 3)
      throw UsageError("expected role=label, got '" + item + "'");
    auto role = role_from_letter(item[0]);
    if (!role)
      throw UsageError("unknown role '" + item.substr(0, 1) + "' (use x, y, a, b)");
    if (values[index(*role)])
      throw UsageError("role '" + item.substr(0, 1) + "' given twice");
    values[index(*role)] = group.element(item.substr(2));
  }
  return values;
}

RoleAssignment resolve_assignment(const Options &opts, const FiniteGroup &group) {
  if (opts.assign.empty())
    throw UsageError("--assign x=<label>,y=<label>,a=<label>,b=<label> is required");
  const auto values = parse_role_values(opts.assign, group);
  std::array<Element, 4> resolved{};
  for (Role role : kRoles) {
    if (!values[index(role)])
      throw UsageError(std::string("--assign is missing role ") + role_letter(role));
    resolved[index(role)] = *values[index(role)];
  }
  return RoleAssignment::make(group, resolved,
                              opts.relax ? Distinctness::relaxed : Distinctness::required);
}

std::string map_text(const GroupMap &map) {
  std::vector<std::string> images;
  for (Element g = 0; g < map.images().size(); ++g)
    images.push_back(map.source().label(g) + "->" + map.target().label(map(g)));
  return std::string(to_string(map.kind())) + " [" + join(images, ", ") + "]";
}

std::string assignment_text(const RoleAssignment &assignment) {
  std::vector<std::string> parts;
  for (Role role : kRoles)
    parts.push_back(std::string(1, role_letter(role)) + "=" +
                    assignment.group().label(assignment.value(role)));
  return join(parts, ",");
}

json maps_json(const std::vector<GroupMap> &maps) {
  json list = json::array();
  for (const auto &map : maps)
    list.push_back(map_to_json(map));
  return list;
}

void emit(std::ostream &out, const json &doc) { out << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int check_group(const Options &opts, std::ostream &out) {
  const FiniteGroup group = resolve_group(opts);
  const StructureFlags flags = structure_flags(group);
  if (opts.json) {
    emit(out, {{"group", group.name()},
               {"valid", true},
               {"order", flags.order},
               {"commutative", flags.commutative},
               {"exponent_two", flags.exponent_two},
               {"identity", group.label(group.identity())},
               {"elements", group.labels()}});
  } else {
    out << "group " << group.name() << ": valid, order " << flags.order << "\n"
        << "  elements: " << join(group.labels(), ", ") << "\n"
        << "  identity: " << group.label(group.identity()) << "\n"
        << "  commutative: " << (flags.commutative ? "yes" : "no") << "\n"
        << "  exponent two: " << (flags.exponent_two ? "yes" : "no") << "\n";
  }
  return kHolds;
}

int classify(const Options &opts, std::ostream &out) {
  const FiniteGroup source = resolve_group(opts);
  const FiniteGroup target = opts.target.empty() && opts.target_file.empty()
                                 ? source
                                 : resolve_group(opts.target, opts.target_file, "target");
  const int given = !opts.images.empty() + !opts.map.empty() + !opts.map_file.empty();
  if (given != 1)
    throw UsageError("give exactly one of --images, --map, --map-file");

  std::optional<GroupMap> map;
  if (!opts.images.empty())
    map = map_from_labels(source, target, split(opts.images, ','));
  else if (!opts.map.empty())
    map = named_map(source, opts.map);
  else
    map = map_from_json(json::parse(read_file(opts.map_file)), source, target);

  if (opts.json) {
    json doc = map_to_json(*map);
    doc["bijective"] = map->bijective();
    emit(out, doc);
  } else {
    out << map_text(*map) << "\n"
        << "  bijective: " << (map->bijective() ? "yes" : "no") << "\n";
  }
  return map->kind() == MapKind::neither ? kFalsified : kHolds;
}

int symmetries(const Options &opts, std::ostream &out) {
  const FiniteGroup group = resolve_group(opts);
  const auto maps = enumerate_symmetries(group, opts.anti);
  if (opts.json) {
    emit(out, {{"group", group.name()},
               {"include_anti", opts.anti},
               {"count", maps.size()},
               {"maps", maps_json(maps)}});
  } else {
    out << maps.size() << (opts.anti ? " symmetries" : " automorphisms") << " of "
        << group.name() << "\n";
    for (const auto &map : maps)
      out << "  " << map_text(map) << "\n";
  }
  return kHolds;
}

std::optional<std::size_t> q8_named_subgroup_order(const SymmetryGroup &sym) {
  if (!sym.base().same_structure(standard_group(StandardKind::q8())))
    return std::nullopt;
  std::vector<Element> gens;
  for (const char *name : {"lambda", "sigma", "tau"})
    gens.push_back(*sym.index_of(named_map(sym.base(), name)));
  return generated_subgroup(sym.as_group(), gens).size();
}

int symmetry_group_report(const Options &opts, std::ostream &out) {
  const FiniteGroup group = resolve_group(opts);
  const SymmetryGroup sym = symmetry_group(group);
  const std::size_t automorphisms = sym.automorphism_subgroup().size();
  std::size_t anti = 0;
  for (const auto &map : sym.maps())
    anti += map.is_anti_homomorphism();
  const auto named_order = q8_named_subgroup_order(sym);
  const bool valid = true; // as_group passed build_group validation

  if (opts.json) {
    json doc = {{"group", group.name()},
                {"order", sym.as_group().order()},
                {"automorphisms", automorphisms},
                {"anti_automorphisms", anti},
                {"commutative", structure_flags(group).commutative},
                {"group_axioms_hold", valid},
                {"elements", sym.as_group().labels()}};
    if (named_order) {
      doc["claimed_order"] = kClaimedQ8SymmetryOrder;
      doc["order_generated_by_lambda_sigma_tau"] = *named_order;
    }
    emit(out, doc);
  } else {
    out << "symmetry group of " << group.name() << "\n"
        << "  computed order: " << sym.as_group().order() << "\n"
        << "  automorphisms: " << automorphisms << "\n"
        << "  anti-automorphisms: " << anti
        << (structure_flags(group).commutative ? " (same maps, group is commutative)"
                                               : "")
        << "\n"
        << "  group axioms: hold\n";
    if (named_order)
      out << "  claimed order: " << kClaimedQ8SymmetryOrder
          << " (automorphisms together with anti-automorphisms)\n"
          << "  order of subgroup generated by lambda, sigma, tau: " << *named_order
          << "\n";
  }
  return kHolds;
}

int generated(const Options &opts, std::ostream &out) {
  const FiniteGroup group = resolve_group(opts);
  if (opts.maps.empty())
    throw UsageError("--maps is required (e.g. lambda,sigma,tau)");
  const SymmetryGroup sym = symmetry_group(group);
  std::vector<Element> gens;
  const auto names = split(opts.maps, ',');
  for (const auto &name : names) {
    auto position = sym.index_of(named_map(group, name));
    if (!position)
      throw Error(ErrorCode::Internal, "map '" + name + "' missing from symmetry group");
    gens.push_back(*position);
  }
  const ElementSubset subgroup = generated_subgroup(sym.as_group(), gens);
  std::size_t homs = 0;
  for (Element m : subgroup.members())
    homs += sym.maps()[m].is_homomorphism();

  if (opts.json) {
    json members = json::array();
    for (Element m : subgroup.members())
      members.push_back(sym.as_group().label(m));
    emit(out, {{"group", group.name()},
               {"generators", names},
               {"order", subgroup.size()},
               {"automorphisms", homs},
               {"anti_automorphisms", subgroup.size() - homs},
               {"symmetry_group_order", sym.as_group().order()},
               {"members", members}});
  } else {
    out << "subgroup generated by " << join(names, ", ") << " in sym("
        << group.name() << ")\n"
        << "  order: " << subgroup.size() << " of " << sym.as_group().order() << "\n"
        << "  automorphisms: " << homs << ", anti-automorphisms: "
        << subgroup.size() - homs << "\n";
  }
  return kHolds;
}

int cf_check(const Options &opts, std::ostream &out) {
  const FiniteGroup group = resolve_group(opts);
  const CFVariant variant = resolve_variant(opts);
  const RoleAssignment assignment = resolve_assignment(opts, group);
  const PartialMap partial = induced_partial_map(assignment, variant);
  const auto found = realizations(assignment, variant, opts.anti);
  // The rewrite is read as directed; it can be undone iff some power of it
  // is the identity rule.
  const bool invertible = rule_period(variant.rule()).has_value();

  if (opts.json) {
    json pairs = json::array();
    for (auto [from, to] : partial.pairs())
      pairs.push_back({group.label(from), group.label(to)});
    emit(out, {{"variant", variant.name()},
               {"formula", render_formula(variant)},
               {"assignment", assignment_to_json(assignment)},
               {"allow_anti", opts.anti},
               {"induced", pairs},
               {"rule_invertible", invertible},
               {"count", found.size()},
               {"realizations", maps_json(found)}});
  } else {
    out << render_formula(variant) << "  (" << variant.name() << ")\n"
        << "  assignment: " << assignment_text(assignment) << "\n  induced:";
    for (auto [from, to] : partial.pairs())
      out << " " << group.label(from) << "->" << group.label(to);
    out << "\n  rule invertible: " << (invertible ? "yes" : "no");
    out << "\n  " << found.size() << " realization(s) among "
        << (opts.anti ? "automorphisms and anti-automorphisms" : "automorphisms")
        << "\n";
    for (const auto &map : found)
      out << "    " << map_text(map) << "\n";
  }
  return found.empty() ? kFalsified : kHolds;
}

int cf_enumerate(const Options &opts, std::ostream &out) {
  const FiniteGroup group = resolve_group(opts);
  const CFVariant variant = resolve_variant(opts);
  RolePins pins;
  if (!opts.pins.empty())
    pins.values = parse_role_values(opts.pins, group);
  const auto results =
      enumerate_assignments(group, variant, opts.anti, pins,
                            opts.relax ? Distinctness::relaxed : Distinctness::required);
  if (opts.json) {
    json list = json::array();
    for (const auto &r : results)
      list.push_back({{"assignment", assignment_to_json(r.assignment)},
                      {"realizations", r.realization_count}});
    emit(out, {{"variant", variant.name()},
               {"formula", render_formula(variant)},
               {"group", group.name()},
               {"allow_anti", opts.anti},
               {"count", results.size()},
               {"assignments", list}});
  } else {
    out << results.size() << " realizable assignment(s) of " << render_formula(variant)
        << " in " << group.name() << "\n";
    for (const auto &r : results)
      out << "  " << assignment_text(r.assignment) << "  realizations: "
          << r.realization_count << "\n";
  }
  return results.empty() ? kFalsified : kHolds;
}

int cf_orbit(const Options &opts, std::ostream &out) {
  const CFVariant variant = resolve_variant(opts);
  std::optional<FiniteGroup> group;
  std::optional<RoleAssignment> assignment;
  if (!opts.group.empty() || !opts.file.empty()) {
    group = resolve_group(opts);
    assignment = resolve_assignment(opts, *group);
  } else if (!opts.assign.empty()) {
    throw UsageError("--assign needs --group or --file");
  }
  const Chain chain = iterate_chain(variant, opts.steps, assignment);

  if (opts.json) {
    json doc = {{"variant", variant.name()},
                {"formula", render_formula(variant)},
                {"chain", chain_to_json(chain, group ? &*group : nullptr)},
                {"symbolic_period", chain.symbolic_period
                                        ? json(*chain.symbolic_period)
                                        : json(nullptr)}};
    if (assignment)
      doc["element_period"] =
          chain.element_period ? json(*chain.element_period) : json(nullptr);
    emit(out, doc);
  } else {
    for (const auto &step : chain.steps) {
      out << "  " << step.step << ": " << to_string(step.side);
      if (step.tuple) {
        std::vector<std::string> labels;
        for (Element g : *step.tuple)
          labels.push_back(group->label(g));
        out << "  = (" << join(labels, ", ") << ")";
      }
      out << "\n";
    }
    auto period = [](const std::optional<std::size_t> &p) {
      return p ? std::to_string(*p) : std::string("none");
    };
    out << "symbolic period: " << period(chain.symbolic_period) << "\n";
    if (assignment)
      out << "element period: " << period(chain.element_period) << "\n";
  }
  return kHolds;
}

int fraction_rule(const Options &opts, std::ostream &out) {
  const FiniteGroup group = resolve_group(opts);
  std::size_t checked = 0;
  std::vector<RoleAssignment> failures;
  if (!opts.assign.empty()) {
    const RoleAssignment assignment = resolve_assignment(opts, group);
    ++checked;
    if (!verify_fraction_rule(assignment))
      failures.push_back(assignment);
  } else {
    const std::size_t n = group.order();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b) {
            const auto assignment =
                RoleAssignment::make(group, {x, y, a, b}, Distinctness::relaxed);
            ++checked;
            if (!verify_fraction_rule(assignment))
              failures.push_back(assignment);
          }
  }
  if (opts.json) {
    json doc = {{"group", group.name()},
                {"checked", checked},
                {"failures", failures.size()},
                {"holds", failures.empty()}};
    if (!failures.empty())
      doc["counterexample"] = assignment_to_json(failures.front());
    emit(out, doc);
  } else {
    out << "fraction rule in " << group.name() << ": " << checked
        << " assignment(s) checked, " << failures.size() << " failure(s)\n";
    if (!failures.empty())
      out << "  counterexample: " << assignment_text(failures.front()) << "\n";
  }
  return failures.empty() ? kHolds : kFalsified;
}

// ---------------------------------------------------------------------------

struct DemoStep {
  std::string title;
  bool ok = false;
  std::string detail;
};

std::vector<DemoStep> demo_steps() {
  std::vector<DemoStep> steps;
  const FiniteGroup q8 = standard_group(StandardKind::q8());
  auto el = [&](const char *label) { return q8.element(label); };

  {
    const std::pair<std::pair<const char *, const char *>, const char *> relations[] = {
        {{"i", "j"}, "k"},  {{"j", "i"}, "-k"}, {{"j", "k"}, "i"},
        {{"k", "j"}, "-i"}, {{"k", "i"}, "j"},  {{"i", "k"}, "-j"},
        {{"i", "i"}, "-1"}, {{"j", "j"}, "-1"}, {{"k", "k"}, "-1"},
        {{"-1", "-1"}, "1"}};
    std::size_t good = 0;
    for (const auto &[factors, product] : relations)
      good += q8.mul(el(factors.first), el(factors.second)) == el(product);
    steps.push_back({"q8 passes the group axioms and its defining relations",
                     good == std::size(relations),
                     std::to_string(good) + "/" + std::to_string(std::size(relations)) +
                         " relations"});
  }

  const GroupMap lambda = q8_lambda(), sigma = q8_sigma(), tau = q8_tau();
  steps.push_back({"lambda: i->k, j->-i, k->j is an anti-automorphism",
                   lambda.kind() == MapKind::anti_homomorphism && lambda.bijective(),
                   map_text(lambda)});
  steps.push_back({"sigma: i->j, j->-k, k->i is an anti-automorphism",
                   sigma.kind() == MapKind::anti_homomorphism && sigma.bijective(),
                   map_text(sigma)});
  steps.push_back({"tau: i->j->k->i is an outer automorphism of order 3",
                   tau.kind() == MapKind::homomorphism && map_order(tau) == 3 &&
                       is_outer(tau),
                   map_text(tau)});
  steps.push_back({"lambda = tau o sigma", compose_maps(tau, sigma) == lambda,
                   map_text(compose_maps(tau, sigma))});

  auto realized_by = [](const RoleAssignment &assignment, const CFVariant &variant,
                        const GroupMap &expected) {
    const auto found = realizations(assignment, variant, true);
    return DemoStep{"", std::find(found.begin(), found.end(), expected) != found.end(),
                    std::to_string(found.size()) + " realization(s)"};
  };
  {
    auto step = realized_by(RoleAssignment::from_labels(q8, {"1", "j", "i", "k"}),
                            classic_variant(), lambda);
    step.title = "classic formula at x=1, a=i, y=j, b=k is realized by lambda";
    steps.push_back(step);
  }
  {
    auto step = realized_by(RoleAssignment::from_labels(q8, {"i", "j", "k", "1"}),
                            dual_variant(), sigma);
    step.title = "dual formula at x=i, y=j, a=k, b=1 is realized by sigma";
    steps.push_back(step);
  }
  {
    const SymmetryGroup sym = symmetry_group(q8);
    const auto named = q8_named_subgroup_order(sym);
    steps.push_back(
        {"symmetry group of q8 (automorphisms and anti-automorphisms)", true,
         "computed order " + std::to_string(sym.as_group().order()) + " (" +
             std::to_string(sym.automorphism_subgroup().size()) +
             " automorphisms); claimed order " +
             std::to_string(kClaimedQ8SymmetryOrder) +
             "; subgroup generated by lambda, sigma, tau has order " +
             std::to_string(*named)});
  }
  return steps;
}

int demo(const Options &opts, std::ostream &out) {
  const auto steps = demo_steps();
  const bool all_ok =
      std::all_of(steps.begin(), steps.end(), [](const DemoStep &s) { return s.ok; });
  if (opts.json) {
    json list = json::array();
    for (const auto &s : steps)
      list.push_back({{"title", s.title}, {"ok", s.ok}, {"detail", s.detail}});
    emit(out, {{"steps", list}, {"ok", all_ok}});
  } else {
    for (const auto &s : steps)
      out << (s.ok ? "[ok]   " : "[FAIL] ") << s.title << "\n       " << s.detail
          << "\n";
  }
  return all_ok ? kHolds : kFalsified;
}

// ---------------------------------------------------------------------------

void add_group_options(CLI::App &cmd, Options &opts) {
  cmd.add_option("--group", opts.group,
                 "built-in group: q8, klein, sign, trivial, c1..c64, ea2-0..ea2-6");
  cmd.add_option("--file", opts.file, "group file (JSON); overrides --group");
}

void add_variant_options(CLI::App &cmd, Options &opts) {
  cmd.add_option("--variant", opts.variant, "classic | dual | mosko (default classic)");
  cmd.add_option("--formula", opts.formula,
                 "formula text, e.g. \"F_x(a):F_y(b) => F_x(b):F_a^-1(y)\"");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opts;
  CLI::App app{"cfkit: finite groups, (anti-)automorphisms and the canonical formula", "cfkit"};
  app.require_subcommand(1);

  std::function<int()> action;
  auto sub = [&](const char *name, const char *help, int (*fn)(const Options &,
                                                              std::ostream &)) {
    CLI::App *cmd = app.add_subcommand(name, help);
    cmd->add_flag("--json", opts.json, "emit a single JSON object");
    cmd->callback([&, fn] { action = [&, fn] { return fn(opts, out); }; });
    return cmd;
  };

  auto *check = sub("check-group", "validate a group table", check_group);
  add_group_options(*check, opts);

  auto *cls = sub("classify-map", "classify a map as hom / anti / both / neither",
                  classify);
  add_group_options(*cls, opts);
  cls->add_option("--target", opts.target, "built-in target group (default: source)");
  cls->add_option("--target-file", opts.target_file, "target group file");
  cls->add_option("--images", opts.images, "comma-separated images in element order");
  cls->add_option("--map", opts.map, "named map: id, inv, lambda, sigma, tau");
  cls->add_option("--map-file", opts.map_file, "map JSON file");

  auto *syms = sub("symmetries", "list automorphisms (and anti-automorphisms)",
                   symmetries);
  add_group_options(*syms, opts);
  syms->add_flag("--anti", opts.anti, "include anti-automorphisms");

  auto *symgroup = sub("symmetry-group", "order report for the extended symmetry group",
                       symmetry_group_report);
  add_group_options(*symgroup, opts);

  auto *gen = sub("generated-subgroup",
                  "order of the subgroup generated by named maps", generated);
  add_group_options(*gen, opts);
  gen->add_option("--maps", opts.maps, "comma-separated: id, inv, lambda, sigma, tau");

  auto *check_cf = sub("cf-check", "search realizations of a formula at an assignment",
                       cf_check);
  add_group_options(*check_cf, opts);
  add_variant_options(*check_cf, opts);
  check_cf->add_option("--assign", opts.assign, "x=<label>,y=<label>,a=<label>,b=<label>");
  check_cf->add_flag("--anti", opts.anti, "admit anti-automorphisms");
  check_cf->add_flag("--relax", opts.relax, "allow roles to share elements");

  auto *enumerate = sub("cf-enumerate", "list all realizable assignments", cf_enumerate);
  add_group_options(*enumerate, opts);
  add_variant_options(*enumerate, opts);
  enumerate->add_option("--pin", opts.pins, "fixed roles, e.g. x=1,y=j");
  enumerate->add_flag("--anti", opts.anti, "admit anti-automorphisms");
  enumerate->add_flag("--relax", opts.relax, "allow roles to share elements");

  auto *orbit = sub("cf-orbit", "iterate a formula's role substitution", cf_orbit);
  add_group_options(*orbit, opts);
  add_variant_options(*orbit, opts);
  orbit->add_option("--steps", opts.steps, "number of rewriting steps (default 6)")
      ->check(CLI::PositiveNumber);
  orbit->add_option("--assign", opts.assign, "evaluate the chain at this assignment");
  orbit->add_flag("--relax", opts.relax, "allow roles to share elements");

  auto *fraction = sub("fraction-rule",
                       "check the fraction identity (all assignments by default)",
                       fraction_rule);
  add_group_options(*fraction, opts);
  fraction->add_option("--assign", opts.assign, "check a single assignment");
  fraction->add_flag("--relax", opts.relax, "allow roles to share elements");

  sub("demo", "replay the q8 computations end to end", demo);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action();
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    if (opts.json)
      emit(out, {{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception &e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
  }
  return kUsage;
}

} // namespace cf::cli
