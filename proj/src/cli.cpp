#include "kzl/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "kzl/binomial_edge.hpp"
#include "kzl/io.hpp"

namespace kzl {

namespace {

using nlohmann::json;

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  json certificates = json::array();
  json failures = json::array();
  bool json_mode = false;
  std::ostream* out = nullptr;

  void line(const std::string& text) {
    if (!json_mode) *out << text << "\n";
  }
  int finish(int code) {
    if (json_mode) {
      json j{{"command", command},
             {"inputs", inputs},
             {"result", result},
             {"certificates", certificates},
             {"failures", failures}};
      *out << j.dump(2) << "\n";
    }
    return code;
  }
};

MonomialOrder order_for(const RingPtr& ring, const std::string& spec) {
  if (spec.empty()) return MonomialOrder::revlex_default(ring);
  return parse_order_spec(ring, spec);
}

json basis_json(const GroebnerBasis& gb) {
  json arr = json::array();
  for (const auto& g : gb.elements) arr.push_back(g.to_string());
  return arr;
}

void print_basis(Report& rep, const GroebnerBasis& gb) {
  for (const auto& g : gb.elements) rep.line(g.to_string());
  if (gb.elements.empty()) rep.line("0");
}

json verify_json(const VerifyReport& report) {
  json members = json::array();
  for (const auto& o : report.outcomes) {
    json m{{"member", o.display}, {"ok", o.ok}};
    if (o.ok) {
      m["witness"] = o.witness_display;
      m["ell"] = o.used.ell.to_string();
      m["colon"] = o.colon_display;
      m["supplied"] = o.via_supplied;
    } else {
      m["failure"] = o.failure;
    }
    members.push_back(std::move(m));
  }
  json fails = json::array();
  for (const auto& f : report.failures) fails.push_back(f);
  return json{{"ok", report.ok}, {"members", members}, {"failures", fails}};
}

void print_verify(Report& rep, const VerifyReport& report) {
  rep.line(report.ok ? "filtration verifies" : "filtration FAILS");
  for (const auto& o : report.outcomes) {
    if (o.ok)
      rep.line("  ok (" + o.display + ")  J=(" + o.witness_display +
               ")  ell=" + o.used.ell.to_string() + "  colon=(" + o.colon_display + ")");
    else
      rep.line("  FAIL (" + o.display + "): " + o.failure);
  }
}

int cmd_gb(Report& rep, const std::string& path, const std::string& order_spec) {
  IdealFile file = read_ideal_file(path);
  MonomialOrder ord = order_for(file.ring, order_spec);
  IdealHandle ideal(file.ring, file.polynomials);
  auto gb = ideal.groebner(ord);
  rep.inputs["ideal"] = path;
  rep.inputs["order"] = ord.spec_string();
  rep.result["basis"] = basis_json(*gb);
  rep.result["quadratic"] = gb->max_degree() <= 2;
  print_basis(rep, *gb);
  return rep.finish(0);
}

int cmd_colon(Report& rep, const std::string& path, const std::string& poly_text,
              const std::string& order_spec, bool last_variable) {
  IdealFile file = read_ideal_file(path);
  MonomialOrder ord = order_for(file.ring, order_spec);
  Polynomial f = Polynomial::parse(file.ring, poly_text);
  IdealHandle ideal(file.ring, file.polynomials);
  rep.inputs["ideal"] = path;
  rep.inputs["by"] = f.to_string();
  IdealHandle colon;
  if (last_variable) {
    auto gb = ideal.groebner(ord);
    GroebnerBasis quotient = colon_by_last_variable(*gb);
    if (f != Polynomial::variable(file.ring, ord.least_variable()))
      throw Error("--last-variable requires the least variable of the order");
    colon = IdealHandle(file.ring, quotient.elements);
  } else {
    colon = colon_general(ideal, f);
  }
  auto gb = colon.groebner(ord);
  rep.result["basis"] = basis_json(*gb);
  print_basis(rep, *gb);
  return rep.finish(0);
}

int cmd_closed(Report& rep, const std::string& path, bool search) {
  Graph g = read_graph_file(path);
  rep.inputs["graph"] = path;
  if (!search) {
    ClosednessCheck check = is_closed_labeling(g);
    rep.result["closed"] = check.closed;
    if (check.closed) {
      rep.line("closed: true");
      return rep.finish(0);
    }
    rep.result["witness"] = {check.witness[0], check.witness[1], check.witness[2]};
    rep.failures.push_back("not closed; witness (" + std::to_string(check.witness[0]) +
                           "," + std::to_string(check.witness[1]) + "," +
                           std::to_string(check.witness[2]) + ")");
    rep.line("closed: false");
    rep.line("witness: (" + std::to_string(check.witness[0]) + "," +
             std::to_string(check.witness[1]) + "," + std::to_string(check.witness[2]) +
             ")");
    return rep.finish(1);
  }
  auto labeling = find_closed_labeling(g);
  if (!labeling) {
    rep.result["labeling"] = nullptr;
    rep.failures.push_back("no closed labeling exists");
    rep.line("labeling: none");
    return rep.finish(1);
  }
  std::string text;
  json arr = json::array();
  for (int v = 1; v <= g.size(); ++v) {
    if (!text.empty()) text += " ";
    text += std::to_string((*labeling)[v]);
    arr.push_back((*labeling)[v]);
  }
  rep.result["labeling"] = arr;
  rep.line("labeling: " + text);
  return rep.finish(0);
}

int cmd_bei(Report& rep, const std::string& path, bool check_closed, bool quadratic,
            int colon_i, bool linear_quotients, bool filtration,
            const std::string& emit, bool c_universal, bool certify, Exec exec) {
  Graph g = read_graph_file(path);
  EdgeRingContext ctx = build_context(g);
  rep.inputs["graph"] = path;

  if (check_closed || quadratic) {
    auto [closed, quad] = closed_iff_quadratic(ctx);
    rep.result["closed"] = closed;
    rep.result["quadratic_basis"] = quad;
    rep.line(std::string("closed: ") + (closed ? "true" : "false"));
    rep.line(std::string("quadratic basis: ") + (quad ? "true" : "false"));
    if (closed != quad) {
      rep.failures.push_back("closedness and quadratic-basis flags disagree");
      return rep.finish(1);
    }
    return rep.finish((check_closed ? closed : quad) ? 0 : 1);
  }

  if (colon_i > 0) {
    SequenceColon step = colon_x_sequence(ctx, colon_i);
    auto gb = step.colon.groebner(ctx.revlex_yx);
    rep.result["colon_basis"] = basis_json(*gb);
    rep.result["formula_applies"] = step.closed;
    rep.result["formula_matches"] = step.formula_matches;
    rep.result["linear"] = step.linear;
    json vars = json::array();
    for (int v : step.formula_vars) vars.push_back(ctx.ring->name(v));
    rep.result["formula_variables"] = vars;
    print_basis(rep, *gb);
    std::string names;
    for (int v : step.formula_vars) names += (names.empty() ? "" : ",") + ctx.ring->name(v);
    rep.line("variable formula: (" + names + ")");
    rep.line(std::string("matches: ") + (step.formula_matches ? "true" : "false"));
    if (step.closed && !step.formula_matches) {
      rep.failures.push_back("interval colon formula mismatch");
      return rep.finish(1);
    }
    return rep.finish(0);
  }

  if (linear_quotients) {
    bool ok = has_linear_quotients_x(ctx);
    rep.result["linear_quotients"] = ok;
    rep.line(std::string("linear quotients: ") + (ok ? "true" : "false"));
    return rep.finish(ok ? 0 : 1);
  }

  if (filtration) {
    if (!is_closed_labeling(ctx.graph).closed) {
      rep.failures.push_back("graph is not closed with respect to its labeling");
      rep.line("not closed: no filtration construction");
      return rep.finish(1);
    }
    Filtration f = koszul_filtration(ctx);
    VerifyReport report = verify(f, exec);
    rep.result = verify_json(report);
    print_verify(rep, report);
    bool certified_ok = true;
    if (certify) {
      // re-validate the colon identities behind the construction
      for (int i = 1; i <= g.size(); ++i) {
        SequenceColon step = colon_x_sequence(ctx, i);
        if (!step.formula_matches) {
          certified_ok = false;
          rep.failures.push_back("variable colon formula failed at i=" +
                                 std::to_string(i));
        }
      }
      for (int k = 1; k <= g.size() - 1; ++k) {
        NeighborIntervals nb = neighbor_intervals(g, k);
        if (nb.above.empty() || nb.min_below_next == 0) continue;
        YStepColon yc = colon_y_step(ctx, k);
        if (!yc.certified) {
          certified_ok = false;
          rep.failures.push_back("mixed colon identity failed at k=" + std::to_string(k));
        }
        for (int s = k + 2; s <= nb.max_above; ++s)
          if (!y_step_regular(ctx, k, s)) {
            certified_ok = false;
            rep.failures.push_back("regularity failed at k=" + std::to_string(k) +
                                   ", s=" + std::to_string(s));
          }
      }
      rep.result["certified"] = certified_ok;
      rep.line(std::string("colon identities certified: ") +
               (certified_ok ? "true" : "false"));
    }
    if (!emit.empty()) {
      std::ofstream file(emit);
      if (!file) throw Error("cannot write '" + emit + "'");
      for (const auto& [key, member] : f.members()) file << member.display() << "\n";
      rep.line("wrote " + emit);
    }
    for (const auto& fail : report.failures) rep.failures.push_back(fail);
    return rep.finish(report.ok && certified_ok ? 0 : 1);
  }

  if (c_universal) {
    CUniversalReport r = c_universal_necessary(ctx);
    rep.result["colon_family_ok"] = r.colon_family_ok;
    if (r.witness) rep.result["witness"] = r.witness->to_string();
    if (r.full_family_ok) rep.result["full_family_ok"] = *r.full_family_ok;
    rep.line(std::string("c-universal colon family: ") +
             (r.colon_family_ok ? "true" : "false"));
    if (r.witness) rep.line("witness: " + r.witness->to_string());
    if (r.full_family_ok)
      rep.line(std::string("full subset-family verification: ") +
               (*r.full_family_ok ? "true" : "false"));
    if (!r.colon_family_ok)
      rep.failures.push_back("colon family fails at vertex " +
                             std::to_string(r.failing_vertex));
    return rep.finish(r.colon_family_ok ? 0 : 1);
  }

  throw CLI::ValidationError("bei", "choose one of --check-closed, --quadratic-gb, "
                                    "--colon, --linear-quotients, --filtration, "
                                    "--c-universal");
}

int cmd_koszul_verify(Report& rep, const std::string& path,
                      const std::string& quotient_override,
                      const std::string& order_spec, bool flag_check, bool serial) {
  FiltrationFile file = read_filtration_file(path);
  std::string quotient_path = quotient_override;
  if (quotient_path.empty()) {
    if (!file.quotient_path) throw Error("no quotient ideal: add a 'quotient:' header");
    quotient_path = directory_of(path) + "/" + *file.quotient_path;
  }
  IdealFile ideal_file = read_ideal_file(quotient_path);
  MonomialOrder ord = order_for(ideal_file.ring, order_spec);
  HostPtr host = QuotientRing::make(ideal_file.ring,
                                    IdealHandle(ideal_file.ring, ideal_file.polynomials),
                                    ord);
  Filtration filtration(host);
  for (const auto& member : file.members) {
    if (member.maximal) {
      filtration.add(maximal_ideal(host));
      continue;
    }
    std::vector<Polynomial> forms;
    for (const auto& text : member.forms)
      forms.push_back(Polynomial::parse(ideal_file.ring, text));
    filtration.add(LinearIdeal(host, std::move(forms)));
  }
  rep.inputs["filtration"] = path;
  rep.inputs["quotient"] = quotient_path;
  rep.inputs["order"] = ord.spec_string();
  rep.inputs["members"] = filtration.size();
  VerifyReport report = verify(filtration, serial ? Exec::Serial : default_exec());
  rep.result = verify_json(report);
  print_verify(rep, report);
  if (flag_check && report.ok) {
    bool flag = is_flag(filtration, report);
    rep.result["flag"] = flag;
    rep.line(std::string("flag: ") + (flag ? "true" : "false"));
  }
  for (const auto& f : report.failures) rep.failures.push_back(f);
  return rep.finish(report.ok ? 0 : 1);
}

int cmd_hibi(Report& rep, const std::string& path, bool ideals, bool joinmeet,
             bool filtration, bool upsets, const std::vector<std::string>& colon_pair,
             const std::string& reduced_file, bool certify, Exec exec) {
  const std::string colon_i = colon_pair.size() > 0 ? colon_pair[0] : "";
  const std::string colon_j = colon_pair.size() > 1 ? colon_pair[1] : "";
  PosetOrLattice input = read_poset_or_lattice_file(path);
  DistributiveLattice lattice =
      std::holds_alternative<Poset>(input)
          ? DistributiveLattice::from_poset(std::get<Poset>(input))
          : std::get<DistributiveLattice>(input);
  rep.inputs["lattice"] = path;
  rep.inputs["elements"] = lattice.size();

  if (ideals) {
    auto downs = poset_ideals(lattice);
    json arr = json::array();
    for (Subset s : downs) {
      arr.push_back(subset_display(lattice, s));
      rep.line(subset_display(lattice, s));
    }
    rep.result["poset_ideals"] = arr;
    rep.result["count"] = downs.size();
    rep.line("count: " + std::to_string(downs.size()));
    return rep.finish(0);
  }

  HostPtr host = hibi_host(lattice);

  if (joinmeet) {
    auto gb = host->defining().groebner(host->order());
    rep.inputs["order"] = host->order().spec_string();
    rep.result["basis"] = basis_json(*gb);
    rep.result["generators"] = host->defining().generators().size();
    rep.result["initial_is_incomparable_products"] =
        initial_ideal_is_incomparable_products(lattice, host);
    print_basis(rep, *gb);
    return rep.finish(0);
  }

  if (!colon_i.empty() || !colon_j.empty()) {
    Subset si = parse_subset(lattice, colon_i);
    Subset sj = parse_subset(lattice, colon_j);
    CoverColon cc = colon_cover(host, lattice, si, sj);
    rep.result["added"] = lattice.name(cc.added);
    rep.result["cogenerated"] = subset_display(lattice, cc.cogenerated);
    rep.result["certified"] = cc.certified;
    rep.line("added element: " + lattice.name(cc.added));
    rep.line("co-generated ideal: " + subset_display(lattice, cc.cogenerated));
    rep.line(std::string("certified: ") + (cc.certified ? "true" : "false"));
    if (!cc.certified) rep.failures.push_back("cover colon does not match");
    return rep.finish(cc.certified ? 0 : 1);
  }

  if (filtration || upsets) {
    Filtration f = filtration ? hibi_koszul_filtration(host, lattice)
                              : upset_filtration(host, lattice);
    VerifyReport report = verify(f, exec);
    bool covers_ok = true;
    if (certify && filtration) {
      // certify every covering pair of the ideal lattice
      auto downs = poset_ideals(lattice);
      for (Subset s : downs)
        for (int c = 0; c < lattice.size(); ++c) {
          if (((s >> c) & 1) || !is_poset_ideal(lattice, s | (1u << c))) continue;
          CoverColon cc = colon_cover(host, lattice, s, s | (1u << c));
          json cert{{"ideal", subset_display(lattice, s)},
                    {"added", lattice.name(c)},
                    {"cogenerated", subset_display(lattice, cc.cogenerated)},
                    {"certified", cc.certified}};
          rep.certificates.push_back(cert);
          if (!cc.certified) covers_ok = false;
        }
      rep.result["covers_certified"] = covers_ok;
      rep.line(std::string("covering pairs certified: ") + (covers_ok ? "true" : "false"));
    }
    rep.result["verify"] = verify_json(report);
    rep.result["members"] = f.size();
    print_verify(rep, report);
    for (const auto& fail : report.failures) rep.failures.push_back(fail);
    bool ok = report.ok && covers_ok;
    return rep.finish(ok ? 0 : 1);
  }

  if (!reduced_file.empty()) {
    auto lines = read_text_file(reduced_file);
    std::vector<Subset> family;
    std::istringstream in(lines);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      // trim
      size_t b = line.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) continue;
      size_t e = line.find_last_not_of(" \t\r\n");
      family.push_back(parse_subset(lattice, line.substr(b, e - b + 1)));
    }
    ReducedFamilyReport r = reduced_family_check(host, lattice, family, exec);
    rep.result["conditions_ok"] = r.conditions_ok;
    if (!r.conditions_ok) {
      rep.failures.push_back(r.failure);
      rep.line("conditions: false (" + r.failure + ")");
      return rep.finish(1);
    }
    rep.result["verify"] = verify_json(*r.verify_report);
    rep.line("conditions: true");
    print_verify(rep, *r.verify_report);
    return rep.finish(r.verify_report->ok ? 0 : 1);
  }

  throw CLI::ValidationError("hibi", "choose one of --ideals, --joinmeet, "
                                     "--filtration, --upsets, --colon, --reduced");
}

int cmd_toric(Report& rep, const std::string& path, const std::string& order_spec) {
  ImagesFile file = read_images_file(path);
  IdealHandle kernel = kernel_of_monomial_map(file.ring, file.images);
  MonomialOrder ord = order_for(kernel.ring(), order_spec);
  auto gb = kernel.groebner(ord);
  rep.inputs["images"] = path;
  rep.inputs["order"] = ord.spec_string();
  rep.result["basis"] = basis_json(*gb);
  rep.result["quadratic"] = gb->max_degree() <= 2;
  rep.result["ring"] = ring_names_header(*kernel.ring());
  print_basis(rep, *gb);
  return rep.finish(0);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Groebner toolkit for closed graphs, binomial edge ideals, "
               "Koszul filtrations and join-meet rings"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_mode = false;
  bool certify = false;
  bool serial = false;
  long long seed = 0;
  app.add_flag("--json", json_mode, "machine-readable output");
  app.add_flag("--certify", certify, "re-validate combinatorial formulas by the "
                                     "elimination oracle");
  app.add_flag("--serial", serial, "disable parallel verification sweeps");
  app.add_option("--seed", seed, "seed recorded for randomized pipelines");

  std::string gb_path, gb_order;
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb->add_option("ideal", gb_path)->required();
  gb->add_option("--order", gb_order);

  std::string colon_path, colon_poly, colon_order;
  bool colon_last = false;
  auto* colon = app.add_subcommand("colon", "colon ideal I : f");
  colon->add_option("ideal", colon_path)->required();
  colon->add_option("poly", colon_poly)->required();
  colon->add_option("--order", colon_order);
  colon->add_flag("--last-variable", colon_last,
                  "divide out the least variable of a revlex basis");

  std::string closed_path;
  bool closed_search = false;
  auto* closed = app.add_subcommand("closed", "closedness of a labeled graph");
  closed->add_option("graph", closed_path)->required();
  closed->add_flag("--search", closed_search, "search all labelings");

  std::string bei_path, bei_emit;
  bool bei_closed = false, bei_quadratic = false, bei_linquot = false,
       bei_filtration = false, bei_cuniversal = false;
  int bei_colon = 0;
  auto* bei = app.add_subcommand("bei", "binomial edge ideal toolkit");
  bei->add_option("graph", bei_path)->required();
  bei->add_flag("--check-closed", bei_closed);
  bei->add_flag("--quadratic-gb", bei_quadratic);
  bei->add_option("--colon", bei_colon, "colon of (J_G, x_n..x_{i+1}) by x_i");
  bei->add_flag("--linear-quotients", bei_linquot);
  bei->add_flag("--filtration", bei_filtration);
  bei->add_option("--emit", bei_emit, "write the filtration members to a file");
  bei->add_flag("--c-universal", bei_cuniversal);

  std::string kv_path, kv_quotient, kv_order;
  bool kv_flag = false;
  auto* kv = app.add_subcommand("koszul-verify", "verify a filtration file");
  kv->add_option("filtration", kv_path)->required();
  kv->add_option("--quotient", kv_quotient, "ideal file when the header is absent");
  kv->add_option("--order", kv_order);
  kv->add_flag("--flag", kv_flag, "also decide whether the family is a flag");

  std::string hibi_path, hibi_reduced;
  std::vector<std::string> hibi_colon;
  bool hibi_ideals = false, hibi_joinmeet = false, hibi_filtration = false,
       hibi_upsets = false;
  auto* hibi = app.add_subcommand("hibi", "join-meet rings of distributive lattices");
  hibi->add_option("poset", hibi_path)->required();
  hibi->add_flag("--ideals", hibi_ideals);
  hibi->add_flag("--joinmeet", hibi_joinmeet);
  hibi->add_flag("--filtration", hibi_filtration);
  hibi->add_flag("--upsets", hibi_upsets);
  hibi->add_option("--colon", hibi_colon, "covering pair of poset ideals (comma lists)")
      ->expected(2);
  hibi->add_option("--reduced", hibi_reduced, "family file to test conditions (i),(ii)");

  std::string toric_path, toric_order;
  auto* toric = app.add_subcommand("toric", "kernel of a monomial map");
  toric->add_option("images", toric_path)->required();
  toric->add_option("--order", toric_order);

  std::vector<const char*> argv;
  argv.push_back("kzl");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (const char* env = std::getenv("KOSZUL_GB_LIMIT")) {
    set_spair_limit(std::atoll(env));
  }

  Report rep;
  rep.json_mode = json_mode;
  rep.out = &out;
  rep.inputs["seed"] = seed;

  try {
    if (gb->parsed()) {
      rep.command = "gb";
      return cmd_gb(rep, gb_path, gb_order);
    }
    if (colon->parsed()) {
      rep.command = "colon";
      return cmd_colon(rep, colon_path, colon_poly, colon_order, colon_last);
    }
    if (closed->parsed()) {
      rep.command = "closed";
      return cmd_closed(rep, closed_path, closed_search);
    }
    if (bei->parsed()) {
      rep.command = "bei";
      return cmd_bei(rep, bei_path, bei_closed, bei_quadratic, bei_colon, bei_linquot,
                     bei_filtration, bei_emit, bei_cuniversal, certify,
                     serial ? Exec::Serial : default_exec());
    }
    if (kv->parsed()) {
      rep.command = "koszul-verify";
      return cmd_koszul_verify(rep, kv_path, kv_quotient, kv_order, kv_flag, serial);
    }
    if (hibi->parsed()) {
      rep.command = "hibi";
      return cmd_hibi(rep, hibi_path, hibi_ideals, hibi_joinmeet, hibi_filtration,
                      hibi_upsets, hibi_colon, hibi_reduced, certify,
                      serial ? Exec::Serial : default_exec());
    }
    if (toric->parsed()) {
      rep.command = "toric";
      return cmd_toric(rep, toric_path, toric_order);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GbLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace kzl
