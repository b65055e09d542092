/*
   Copyright 2026 The cuphom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cuphom/cli/cli.hpp"

#include <algorithm>
#include <iostream>

#include "CLI11.hpp"
#include "cuphom/cli/spec_file.hpp"

namespace cuphom::cli {

namespace {

struct HomologyArgs {
  std::string spec_path;
  std::string parity = "both";
  std::optional<int> power;
  std::string page;
  bool no_stability = false;
  bool json = false;
};

struct VerifyArgs {
  std::string check;
  std::optional<std::int64_t> n, m, d, g;
  std::optional<int> b1, exponent;
  std::vector<std::int64_t> xi;
  std::string ring = "Z";
  std::string spec_path;
  int trials = 10;
  std::uint64_t seed = 0;
  int i_max = 6, k_max = 24;
  bool paper = false;
  bool json = false;
};

Json module_summary(const PresentedUModule& m) {
  Json out{{"generators", m.ambient_rank},
           {"relations", m.relations.basis().cols()},
           {"power", m.power},
           {"invariants", to_json(module_invariants(m))},
           {"u", m.u_label}};
  if (m.ring.is_field()) out["dimension"] = field_dimension(m);
  return out;
}

void print_table(std::ostream& out, const std::string& label_header, const Json& rows) {
  out << label_header << "\tgroup\tT^N=id\tnilpotency\tgenerators\trelations\n";
  for (const auto& r : rows) {
    const Json& inv = r["invariants"];
    out << r["label"].get<std::string>() << '\t' << inv["group"]["text"].get<std::string>() << '\t'
        << (inv["t_n_identity"].get<bool>() ? "yes" : "no") << '\t' << inv["nilpotency"].get<int>() << '\t'
        << r["generators"].get<std::size_t>() << '\t' << r["relations"].get<std::size_t>() << '\n';
  }
}

int cmd_homology(const HomologyArgs& a, std::ostream& out) {
  const ManifoldSpec spec = load_spec_file(a.spec_path);
  const auto cx = build_complex(spec);
  HomologyOptions opts;
  opts.power = a.power;
  opts.stability_check = !a.no_stability;

  Json report{{"spec", to_json(spec)}, {"N", spec.n_value()}};
  Json rows = Json::array();
  std::string header;
  if (a.page == "e2") {
    header = "degree";
    const auto pages = e2_page(cx, opts);
    for (std::size_t d = 0; d < pages.size(); ++d) {
      Json row = module_summary(pages[d]);
      row["label"] = std::to_string(d);
      rows.push_back(row);
    }
  } else {
    header = "parity";
    std::vector<Parity> which;
    if (a.parity == "both") which = {Parity::Even, Parity::Odd};
    else if (a.parity == "even") which = {Parity::Even};
    else if (a.parity == "odd") which = {Parity::Odd};
    else which = {Parity::Total};
    for (Parity p : which) {
      Json row = module_summary(homology(cx, p, opts));
      row["label"] = to_string(p);
      rows.push_back(row);
    }
  }
  report[a.page == "e2" ? "e2_page" : "homology"] = rows;
  if (a.json) {
    out << report.dump(2) << '\n';
  } else {
    out << "spec: " << spec.to_string() << "  N=" << spec.n_value() << '\n';
    print_table(out, header, rows);
  }
  return kPass;
}

ManifoldSpec spec_from_flags(const VerifyArgs& a) {
  if (!a.spec_path.empty()) return load_spec_file(a.spec_path);
  const int b1 = a.b1.value_or(a.xi.empty() ? 3 : static_cast<int>(a.xi.size()));
  std::vector<std::int64_t> xi = a.xi;
  if (xi.empty()) {
    xi.assign(static_cast<std::size_t>(std::max(b1, 0)), 0);
    if (!xi.empty()) xi[0] = a.n.value_or(1);
  }
  std::map<CupIndex, Integer> cup;
  if (a.m && *a.m != 0) {
    if (b1 < 3) throw InputError("--m needs b1 >= 3");
    cup[{1, 2, 3}] = Integer(static_cast<long>(*a.m));
  }
  return ManifoldSpec(b1, xi, cup, CoeffRing::parse(a.ring));
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  CheckReport r;
  if (a.check == "lemma-torus") {
    const ManifoldSpec s = spec_from_flags(a);
    r = check_lemma_torus(s.b1(), s.xi(), s.ring());
  } else if (a.check == "theorem1") {
    r = check_theorem1(spec_from_flags(a));
  } else if (a.check == "annihilation") {
    if (a.paper) {
      r = check_annihilation_paper(a.n.value_or(1), a.m.value_or(1), a.exponent.value_or(4));
    } else {
      r = check_annihilation_bound(spec_from_flags(a), a.trials, a.seed, a.exponent);
    }
  } else if (a.check == "theorem2") {
    if (!a.m) throw InputError("theorem2 needs --m");
    r = check_theorem2(a.n.value_or(1), *a.m, a.i_max, a.k_max);
  } else {
    if (!a.d || !a.g) throw InputError("pfh-translate needs --d and --g");
    r = check_pfh_translation(*a.d, *a.g, a.b1.value_or(3), a.n.value_or(1));
  }
  out << (a.json ? r.to_json().dump(2) + "\n" : r.to_text());
  return r.passed ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology of the model complex and its U-module structure", "cuphom"};
  app.require_subcommand(1);

  HomologyArgs h;
  auto* hom = app.add_subcommand("homology", "Module invariants of the homology of a spec file");
  hom->add_option("spec", h.spec_path, "JSON spec file")->required();
  hom->add_option("--parity", h.parity, "even, odd, both or total")
      ->check(CLI::IsMember({"even", "odd", "both", "total"}));
  hom->add_option("--power", h.power, "Truncation power (default: spec value, else b1 + 1)")->check(CLI::Range(1, 64));
  hom->add_option("--page", h.page, "e2: d1-homology per degree")->check(CLI::IsMember({"e2"}));
  hom->add_flag("--no-stability", h.no_stability, "Skip the power + 1 recomputation");
  hom->add_flag("--json", h.json, "Structured output");

  VerifyArgs v;
  auto* ver = app.add_subcommand("verify", "Run a named check");
  ver->add_option("check", v.check, "lemma-torus, theorem1, annihilation, theorem2, pfh-translate")
      ->required()
      ->check(CLI::IsMember({"lemma-torus", "theorem1", "annihilation", "theorem2", "pfh-translate"}));
  ver->add_option("--N", v.n, "Divisibility N (xi = (N, 0, ..., 0) unless --xi)");
  ver->add_option("--m", v.m, "Cup product <a1 u a2 u a3, [Y]>");
  ver->add_option("--b1", v.b1, "First Betti number");
  ver->add_option("--xi", v.xi, "Holonomy weights, comma separated")->delimiter(',');
  ver->add_option("--ring", v.ring, "Z, Q or Zmod:<m>");
  ver->add_option("--spec", v.spec_path, "JSON spec file (overrides --b1/--xi/--N/--m/--ring)");
  ver->add_option("--trials", v.trials, "Random perturbations (annihilation)")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", v.seed, "Seed for all randomness");
  ver->add_option("--i-max", v.i_max, "Classes sigma_1..sigma_i_max (theorem2)")->check(CLI::PositiveNumber);
  ver->add_option("--k-max", v.k_max, "Sweep (T^k - 1), k <= k_max (theorem2)")->check(CLI::PositiveNumber);
  ver->add_option("--d", v.d, "Curve degree (pfh-translate)");
  ver->add_option("--g", v.g, "Fibre genus (pfh-translate)");
  ver->add_option("--exponent", v.exponent, "Exponent of (1 - U^N) (annihilation)")->check(CLI::NonNegativeNumber);
  ver->add_flag("--paper", v.paper, "Use the 4x4 cokernel (annihilation)");
  ver->add_flag("--json", v.json, "Structured output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (hom->parsed()) return cmd_homology(h, out);
    return cmd_verify(v, out);
  } catch (const StabilityError& e) {
    err << "stability error: " << e.what() << '\n';
    return kStability;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kStability;
  }
}

}  // namespace cuphom::cli
