// reflectwist: checks, constructions and enumerations on JSON files.
//
// Every command prints JSON on stdout: a single report object, or for
// `enumerate` one object per line after a header line. Exit status: 0 all
// checks pass, 1 a mathematical property fails, 2 malformed input, 3 size
// gate exceeded.

#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "reflectwist/io.hpp"
#include "reflectwist/monoid.hpp"
#include "reflectwist/search.hpp"
#include "reflectwist/suite.hpp"

using namespace reflectwist;
using io::Json;

namespace {

  enum Exit { pass = 0, property = 1, input = 2, gate = 3 };

  bool pretty = false;

  int emit(Json const& j, bool ok) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    return ok ? pass : property;
  }

  Json report(std::string const& command, Report const& r) {
    Json j       = io::to_json(r);
    j["command"] = command;
    return io::versioned(std::move(j));
  }

  Side side_from(std::string const& s) {
    return s == "left" ? Side::left : Side::right;
  }

  // A skew brace file, or a group file followed by a solution file.
  BraidedGroup braided_group(std::vector<std::string> const& files) {
    if (files.size() == 1) {
      return braiding_from_skewbrace(io::brace_from_json(io::read_file(files[0])));
    }
    if (files.size() == 2) {
      FiniteGroup g = io::group_from_json(io::read_file(files[0]));
      SquareMap   r = io::solution_map_from_json(io::read_file(files[1]));
      if (r.size() != g.size()) {
        throw_shape("group and solution have different sizes");
      }
      return BraidedGroup::validate(g, r);
    }
    throw InputError("FormatError",
                     "expected a skew brace file, or a group and a solution");
  }

  // Splits "host files..., last" for commands taking a trailing operand.
  std::pair<std::vector<std::string>, std::string> split_last(
      std::vector<std::string> const& files, std::size_t min_total) {
    if (files.size() < min_total) {
      throw InputError("FormatError", "too few input files");
    }
    return {{files.begin(), files.end() - 1}, files.back()};
  }

  struct Args {
    std::vector<std::string> files;
    std::string              side     = "right";
    std::string              strategy = "holomorph";
    std::string              level    = "quick";
    std::string              variant  = "kh";
    std::string              k_file;
    std::size_t              degree    = 2;
    std::size_t              order     = 0;
    std::size_t              min_order = 1;
    std::size_t              max_order = 0;
    unsigned                 jobs      = 1;
    bool                     bijective_k   = false;
    bool                     nondegenerate = false;
    bool                     involutive    = false;
    bool                     up_to_iso     = false;
    std::vector<int>         only;
  };

  ////////////////////////////////////////////////////////////////////////
  // check
  ////////////////////////////////////////////////////////////////////////

  int check_ybe_cmd(Args const& a) {
    if (a.files.size() != 1) {
      throw InputError("FormatError", "expected one solution file");
    }
    SquareMap r = io::solution_map_from_json(io::read_file(a.files[0]));
    Report    rep = check_ybe(r);
    return emit(report("check ybe", rep), rep.ok);
  }

  int check_braiding_cmd(Args const& a) {
    if (a.files.size() != 2) {
      throw InputError("FormatError", "expected a group and a solution file");
    }
    FiniteGroup g = io::group_from_json(io::read_file(a.files[0]));
    SquareMap   r = io::solution_map_from_json(io::read_file(a.files[1]));
    if (r.size() != g.size()) {
      throw_shape("group and solution have different sizes");
    }
    Report rep = check_braiding(g, r);
    return emit(report("check braiding", rep), rep.ok);
  }

  int check_reflection_cmd(Args const& a) {
    if (a.files.size() != 2) {
      throw InputError("FormatError", "expected a solution and a map file");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    FiniteMap  k  = io::map_from_json(io::read_file(a.files[1]));
    if (k.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    Report rep = check_reflection(bs, k, side_from(a.side));
    Json   j   = report("check reflection", rep);
    j["side"]  = a.side;
    return emit(j, rep.ok);
  }

  int check_group_reflection_cmd(Args const& a) {
    auto [host, map] = split_last(a.files, 2);
    BraidedGroup bg  = braided_group(host);
    FiniteMap    k   = io::map_from_json(io::read_file(map));
    if (k.size() != bg.size()) {
      throw_shape("map and group have different sizes");
    }
    GroupReflectionReport rep = check_group_reflection(bg, k);
    Json j = io::versioned({{"command", "check group-reflection"},
                            {"ok", rep.is_group_reflection()},
                            {"bre1", io::to_json(rep.bre1)},
                            {"bre2", io::to_json(rep.bre2)},
                            {"bre3", io::to_json(rep.bre3)},
                            {"bre3_prime", io::to_json(rep.bre3_prime)}});
    if (rep.set_level_re) {
      j["set_level_re"] = *rep.set_level_re;
    }
    return emit(j, rep.is_group_reflection());
  }

  int check_twist_cmd(Args const& a) {
    if (a.files.size() != 2) {
      throw InputError("FormatError", "expected a solution and a twist file");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    TwistDatum t  = io::twist_from_json(io::read_file(a.files[1]));
    if (t.size() != bs.size()) {
      throw_shape("twist and solution have different sizes");
    }
    Report rep = check_drinfeld_twist(bs, t);
    return emit(report("check twist", rep), rep.ok);
  }

  int check_group_twist_cmd(Args const& a) {
    auto [host, file] = split_last(a.files, 2);
    BraidedGroup bg   = braided_group(host);
    TwistDatum   t    = io::twist_from_json(io::read_file(file));
    if (t.size() != bg.size()) {
      throw_shape("twist and group have different sizes");
    }
    Report rep = check_group_drinfeld_twist(bg, t);
    return emit(report("check group-twist", rep), rep.ok);
  }

  ////////////////////////////////////////////////////////////////////////
  // twist, derive
  ////////////////////////////////////////////////////////////////////////

  int twist_from_reflection_cmd(Args const& a) {
    if (a.files.size() != 2) {
      throw InputError("FormatError", "expected a solution and a map file");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    FiniteMap  k  = io::map_from_json(io::read_file(a.files[1]));
    if (k.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    return emit(io::to_json(twist_from_reflection(bs, k)), true);
  }

  int twist_compose_cmd(Args const& a) {
    if (a.files.size() != 3) {
      throw InputError("FormatError",
                       "expected a solution and two twist files");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    TwistDatum t1 = io::twist_from_json(io::read_file(a.files[1]));
    TwistDatum t2 = io::twist_from_json(io::read_file(a.files[2]));
    if (t1.size() != bs.size() || t2.size() != bs.size()) {
      throw_shape("twists and solution have different sizes");
    }
    return emit(io::to_json(compose_twists(bs, t1, t2)), true);
  }

  int twist_invert_cmd(Args const& a) {
    if (a.files.size() != 2) {
      throw InputError("FormatError", "expected a solution and a twist file");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    TwistDatum t  = io::twist_from_json(io::read_file(a.files[1]));
    if (t.size() != bs.size()) {
      throw_shape("twist and solution have different sizes");
    }
    return emit(io::to_json(invert_twist(bs, t)), true);
  }

  int derive_cmd(Args const& a) {
    if (a.files.size() != 1) {
      throw InputError("FormatError", "expected one solution file");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    if (a.k_file.empty()) {
      return emit(io::to_json(derived_solution(bs)), true);
    }
    FiniteMap k = io::map_from_json(io::read_file(a.k_file));
    if (k.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    return emit(io::to_json(k_derived(bs, k)), true);
  }

  ////////////////////////////////////////////////////////////////////////
  // monoid
  ////////////////////////////////////////////////////////////////////////

  std::pair<BraidedSet, FiniteMap> solution_and_map(Args const& a) {
    if (a.files.size() != 2) {
      throw InputError("FormatError", "expected a solution and a map file");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    FiniteMap  k  = io::map_from_json(io::read_file(a.files[1]));
    if (k.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    return {bs, k};
  }

  int monoid_classes_cmd(Args const& a) {
    if (a.files.size() != 1) {
      throw InputError("FormatError", "expected one solution file");
    }
    BraidedSet bs = io::solution_from_json(io::read_file(a.files[0]));
    return emit(io::to_json(build_component(bs, a.degree, a.jobs)), true);
  }

  int monoid_garside_cmd(Args const& a) {
    auto [bs, k] = solution_and_map(a);
    Report rep   = garside_commutation_check(bs, k, a.degree);
    Word   delta = garside_map(bs, k, a.degree);
    Json   table = Json::array();
    for (std::size_t c = 0; c < delta.size(); ++c) {
      table.push_back({word_from_code(c, bs.size(), a.degree),
                       word_from_code(static_cast<std::uint64_t>(delta[c]),
                                      bs.size(), a.degree)});
    }
    Json j      = report("monoid garside", rep);
    j["degree"] = a.degree;
    j["map"]    = std::move(table);
    return emit(j, rep.ok);
  }

  int monoid_re_check_cmd(Args const& a) {
    auto [bs, k] = solution_and_map(a);
    Report re    = monoid_reflection_check(bs, k, a.degree);
    Report desc  = Report::pass();
    for (std::size_t d = 2; d <= a.degree && desc.ok; ++d) {
      desc = descent_check(bs, k, d);
    }
    Bre3TransferReport tr = bre3_transfer_check(bs, k, a.degree);
    bool               ok = re.ok && desc.ok;
    Json j = io::versioned(
        {{"command", "monoid re-check"},
         {"degree", a.degree},
         {"ok", ok},
         {"reflection", io::to_json(re)},
         {"descent", io::to_json(desc)},
         {"bre3_transfer", {{"degree_one", io::to_json(tr.degree_one)},
                            {"all_degrees", io::to_json(tr.all_degrees)},
                            {"consistent", tr.consistent()}}}});
    return emit(j, ok);
  }

  ////////////////////////////////////////////////////////////////////////
  // enumerate
  ////////////////////////////////////////////////////////////////////////

  int emit_lines(Json header, std::vector<Json> const& items) {
    header["count"] = items.size();
    std::cout << io::versioned(std::move(header)).dump() << "\n";
    for (Json const& j : items) {
      std::cout << j.dump() << "\n";
    }
    return pass;
  }

  void require_order(Args const& a) {
    if (a.order == 0) {
      throw InputError("FormatError", "--order must be positive");
    }
  }

  int enumerate_solutions_cmd(Args const& a) {
    require_order(a);
    SolutionConstraints c{a.nondegenerate, a.involutive, a.up_to_iso};
    std::vector<Json>   items;
    for (BraidedSet const& bs : enumerate_solutions(a.order, c, a.jobs)) {
      items.push_back(io::to_json(bs));
    }
    return emit_lines({{"command", "enumerate solutions"},
                       {"order", a.order},
                       {"nondegenerate", a.nondegenerate},
                       {"involutive", a.involutive},
                       {"up_to_iso", a.up_to_iso}},
                      items);
  }

  int enumerate_reflections_cmd(Args const& a) {
    if (a.files.size() != 1) {
      throw InputError("FormatError", "expected one solution file");
    }
    BraidedSet        bs = io::solution_from_json(io::read_file(a.files[0]));
    std::vector<Json> items;
    for (FiniteMap const& k : enumerate_reflections(bs, side_from(a.side))) {
      items.push_back(io::to_json(k));
    }
    return emit_lines({{"command", "enumerate reflections"}, {"side", a.side}},
                      items);
  }

  int enumerate_groups_cmd(Args const& a) {
    require_order(a);
    std::vector<Json> items;
    for (FiniteGroup const& g : enumerate_groups(a.order, a.jobs)) {
      items.push_back(io::to_json(g));
    }
    return emit_lines({{"command", "enumerate groups"}, {"order", a.order}},
                      items);
  }

  BraceStrategy strategy_from(std::string const& s) {
    return s == "direct" ? BraceStrategy::direct : BraceStrategy::holomorph;
  }

  int enumerate_skew_braces_cmd(Args const& a) {
    require_order(a);
    std::vector<Json> items;
    for (SkewBrace const& sb :
         enumerate_skew_braces(a.order, strategy_from(a.strategy), a.jobs)) {
      items.push_back(io::to_json(sb));
    }
    return emit_lines({{"command", "enumerate skew-braces"},
                       {"order", a.order},
                       {"strategy", a.strategy}},
                      items);
  }

  int enumerate_group_reflections_cmd(Args const& a) {
    std::vector<Json> items;
    if (!a.files.empty()) {
      for (FiniteMap const& k : enumerate_group_reflections(braided_group(a.files))) {
        items.push_back(io::to_json(k));
      }
      return emit_lines({{"command", "enumerate group-reflections"}}, items);
    }
    require_order(a);
    auto braces = enumerate_skew_braces(a.order, strategy_from(a.strategy),
                                        a.jobs);
    for (std::size_t i = 0; i < braces.size(); ++i) {
      for (FiniteMap const& k : enumerate_group_reflections(braces[i])) {
        Json j           = io::to_json(k);
        j["brace_index"] = i;
        items.push_back(std::move(j));
      }
    }
    return emit_lines({{"command", "enumerate group-reflections"},
                       {"order", a.order},
                       {"strategy", a.strategy}},
                      items);
  }

  ////////////////////////////////////////////////////////////////////////
  // hunt, verify-suite
  ////////////////////////////////////////////////////////////////////////

  int hunt_ell_cmd(Args const& a) {
    if (a.max_order == 0) {
      throw InputError("FormatError", "--max-order must be positive");
    }
    EllSearchStats stats;
    auto variant = a.variant == "hk" ? ComposeVariant::hk : ComposeVariant::kh;
    auto found   = find_ell_counterexamples(a.min_order, a.max_order,
                                            a.bijective_k, a.jobs, &stats,
                                            variant);
    Json findings = Json::array();
    for (auto const& c : found) {
      findings.push_back({{"order", c.brace.size()},
                          {"brace_index", c.brace_index},
                          {"brace", io::to_json(c.brace)},
                          {"k", c.k.images()},
                          {"h", c.h.images()},
                          {"ell", c.ell.images()},
                          {"kind", to_string(c.kind)},
                          {"set_reflection_for_original", c.detail.set_refl_for_r},
                          {"set_reflection_for_twisted",
                           c.detail.set_refl_for_twisted}});
    }
    Json j = io::versioned({{"command", "hunt ell-counterexamples"},
                            {"min_order", a.min_order},
                            {"max_order", a.max_order},
                            {"bijective_k", a.bijective_k},
                            {"variant", to_string(variant)},
                            {"braces", stats.braces},
                            {"pairs", stats.pairs},
                            {"count", found.size()},
                            {"findings", std::move(findings)}});
    return emit(j, true);
  }

  int verify_suite_cmd(Args const& a) {
    SuiteOptions opt;
    opt.level = a.level == "full" ? SuiteLevel::full : SuiteLevel::quick;
    opt.jobs  = a.jobs;
    opt.only  = a.only;
    SuiteResult res = run_suite(opt);
    Json        j   = res.to_json();
    Json        matrix = Json::object();
    for (auto const& c : res.criteria) {
      matrix[c.key] = c.pass ? "PASS" : "FAIL";
    }
    j["command"] = "verify-suite";
    j["matrix"]  = std::move(matrix);
    return emit(j, res.all_pass());
  }

  int run_guarded(std::string const& command, std::function<int()> const& fn) {
    try {
      return fn();
    } catch (Error const& e) {
      int  code = dynamic_cast<SizeLimitExceeded const*>(&e) ? gate
                  : dynamic_cast<InputError const*>(&e)      ? input
                                                             : property;
      Json j    = io::versioned({{"command", command},
                                 {"ok", false},
                                 {"error", io::to_json(e)}});
      std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
      return code;
    } catch (Json::exception const& e) {
      Json j = io::versioned(
          {{"command", command},
           {"ok", false},
           {"error", {{"kind", "FormatError"}, {"message", e.what()},
                      {"witness", Json::array()}}}});
      std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
      return input;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflectwist: braided sets, reflections and Drinfeld twists"};
  app.require_subcommand(1);
  app.add_flag("--pretty", pretty, "indent JSON output");

  Args        a;
  std::string command;
  std::function<int()> action;

  auto files = [&](CLI::App* sub, char const* desc) {
    sub->add_option("files", a.files, desc);
  };
  auto on = [&](CLI::App* sub, std::string name, int (*fn)(Args const&)) {
    sub->callback([&, name, fn] {
      command = name;
      action  = [&, fn] { return fn(a); };
    });
  };
  auto jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", a.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
  };

  // check
  auto* check = app.add_subcommand("check", "verify axioms");
  check->require_subcommand(1);
  struct CheckCmd {
    char const* name;
    char const* files;
    int (*fn)(Args const&);
  };
  for (CheckCmd c : {
           CheckCmd{"ybe", "solution", check_ybe_cmd},
           CheckCmd{"braiding", "group solution", check_braiding_cmd},
           CheckCmd{"reflection", "solution map", check_reflection_cmd},
           CheckCmd{"group-reflection", "brace map | group solution map",
                    check_group_reflection_cmd},
           CheckCmd{"twist", "solution twist", check_twist_cmd},
           CheckCmd{"group-twist", "brace twist | group solution twist",
                    check_group_twist_cmd},
       }) {
    auto* sub = check->add_subcommand(c.name);
    files(sub, c.files);
    if (std::string(c.name) == "reflection") {
      sub->add_option("--side", a.side)->check(CLI::IsMember({"left", "right"}));
    }
    on(sub, std::string("check ") + c.name, c.fn);
  }

  // twist
  auto* twist = app.add_subcommand("twist", "build twist data");
  twist->require_subcommand(1);
  auto* tfr = twist->add_subcommand("from-reflection");
  files(tfr, "solution map");
  on(tfr, "twist from-reflection", twist_from_reflection_cmd);
  auto* tco = twist->add_subcommand("compose");
  files(tco, "solution twist1 twist2");
  on(tco, "twist compose", twist_compose_cmd);
  auto* tin = twist->add_subcommand("invert");
  files(tin, "solution twist");
  on(tin, "twist invert", twist_invert_cmd);

  // derive
  auto* der = app.add_subcommand("derive", "derived or k-derived solution");
  files(der, "solution");
  der->add_option("--k", a.k_file, "map file");
  on(der, "derive", derive_cmd);

  // monoid
  auto* mon = app.add_subcommand("monoid", "structure monoid in one degree");
  mon->require_subcommand(1);
  auto* mcl = mon->add_subcommand("classes");
  files(mcl, "solution");
  jobs(mcl);
  on(mcl, "monoid classes", monoid_classes_cmd);
  auto* mga = mon->add_subcommand("garside");
  files(mga, "solution map");
  on(mga, "monoid garside", monoid_garside_cmd);
  auto* mre = mon->add_subcommand("re-check");
  files(mre, "solution map");
  on(mre, "monoid re-check", monoid_re_check_cmd);
  for (auto* sub : {mcl, mga, mre}) {
    sub->add_option("--degree", a.degree, "word length")->required();
  }

  // enumerate
  auto* en = app.add_subcommand("enumerate", "JSON-lines enumerations");
  en->require_subcommand(1);
  auto* esol = en->add_subcommand("solutions");
  esol->add_flag("--nondegenerate", a.nondegenerate);
  esol->add_flag("--involutive", a.involutive);
  esol->add_flag("--up-to-iso", a.up_to_iso);
  on(esol, "enumerate solutions", enumerate_solutions_cmd);
  auto* eref = en->add_subcommand("reflections");
  files(eref, "solution");
  eref->add_option("--side", a.side)->check(CLI::IsMember({"left", "right"}));
  on(eref, "enumerate reflections", enumerate_reflections_cmd);
  auto* egr = en->add_subcommand("groups");
  on(egr, "enumerate groups", enumerate_groups_cmd);
  auto* esb = en->add_subcommand("skew-braces");
  on(esb, "enumerate skew-braces", enumerate_skew_braces_cmd);
  auto* egref = en->add_subcommand("group-reflections");
  files(egref, "brace | group solution");
  on(egref, "enumerate group-reflections", enumerate_group_reflections_cmd);
  for (auto* sub : {esol, egr, esb, egref}) {
    sub->add_option("--order", a.order, "carrier size");
    jobs(sub);
  }
  for (auto* sub : {esb, egref}) {
    sub->add_option("--strategy", a.strategy)
        ->check(CLI::IsMember({"holomorph", "direct"}));
  }

  // hunt
  auto* hunt = app.add_subcommand("hunt", "counterexample searches");
  hunt->require_subcommand(1);
  auto* hell = hunt->add_subcommand("ell-counterexamples");
  hell->add_option("--max-order", a.max_order)->required();
  hell->add_option("--min-order", a.min_order);
  hell->add_flag("--bijective-k", a.bijective_k);
  hell->add_option("--variant", a.variant)->check(CLI::IsMember({"kh", "hk"}));
  jobs(hell);
  on(hell, "hunt ell-counterexamples", hunt_ell_cmd);

  // verify-suite
  auto* vs = app.add_subcommand("verify-suite", "acceptance battery");
  vs->add_option("--level", a.level)->check(CLI::IsMember({"quick", "full"}));
  vs->add_option("--only", a.only)->delimiter(',');
  jobs(vs);
  on(vs, "verify-suite", verify_suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? pass : input;
  }
  return run_guarded(command, action);
}
