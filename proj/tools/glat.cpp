// Command-line front end: loads lattices from definition files (or "-" for
// standard input), builds the bundled examples, and prints deterministic
// reports. Exit codes: 0 computed (whatever the verdict), 2 bad input,
// 3 failed internal self-check.

#include <CLI11.hpp>

#include <glat/errors.hpp>
#include <glat/gallery.hpp>
#include <glat/latfile.hpp>
#include <glat/report.hpp>
#include <glat/resolutions.hpp>

#include <iostream>
#include <string>

namespace {

int run(CLI::App& app, int argc, char** argv) {
  std::string format = "human";
  int element_cap = 10000;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "kv"}))
      ->capture_default_str();
  app.add_option("--element-cap", element_cap,
                 "Largest group order accepted when closing generators")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.require_subcommand(1);

  std::string show_file;
  auto* show = app.add_subcommand("show", "Print a lattice summary");
  show->fallthrough();
  show->add_option("file", show_file, "Lattice definition file or -")
      ->required();

  std::string coh_file;
  int sub_index = -1;
  bool all_subs = false, coh_dual = false;
  auto* coh =
      app.add_subcommand("cohomology", "First cohomology of the lattice");
  coh->fallthrough();
  coh->add_option("file", coh_file, "Lattice definition file or -")
      ->required();
  auto* sub_opt = coh->add_option("--subgroup", sub_index,
                                  "Only the subgroup with this index");
  auto* all_opt = coh->add_flag("--all-subgroups", all_subs,
                                "One row per subgroup");
  sub_opt->excludes(all_opt);
  all_opt->excludes(sub_opt);
  coh->add_flag("--dual", coh_dual, "Also report the dual lattice");

  std::string fres_file, emit = "summary";
  auto* fres = app.add_subcommand(
      "flasque-resolution", "Exact sequence 0 -> N -> S -> F -> 0 with S "
                            "permutation and F flasque");
  fres->fallthrough();
  fres->add_option("file", fres_file, "Lattice definition file or -")
      ->required();
  fres->add_option("--emit", emit,
                   "summary, or the S/F lattice as a definition file")
      ->check(CLI::IsMember({"summary", "s", "f"}))
      ->capture_default_str();

  std::string check_what, check_file;
  int rank_bound = -1, coeff_bound = 3;
  auto* chk = app.add_subcommand("check", "Test a lattice property");
  chk->fallthrough();
  chk->add_option("property", check_what,
                  "permutation | coflasque | flasque | stably-permutation")
      ->required()
      ->check(CLI::IsMember(
          {"permutation", "coflasque", "flasque", "stably-permutation"}));
  chk->add_option("file", check_file, "Lattice definition file or -")
      ->required();
  chk->add_option("--rank-bound", rank_bound,
                  "Padding search rank cap (default: rank + 8)");
  chk->add_option("--coeff-bound", coeff_bound,
                  "Witness entry bound for the bounded search")
      ->capture_default_str();

  std::string sim_a, sim_b;
  int sim_rank_bound = -1, sim_coeff_bound = 3;
  auto* sim = app.add_subcommand(
      "similar", "Decide whether two lattices differ by permutation summands");
  sim->fallthrough();
  sim->add_option("a", sim_a, "First lattice file or -")->required();
  sim->add_option("b", sim_b, "Second lattice file")->required();
  sim->add_option("--rank-bound", sim_rank_bound,
                  "Padding search rank cap (default: max rank + 8)");
  sim->add_option("--coeff-bound", sim_coeff_bound,
                  "Witness entry bound for the bounded search")
      ->capture_default_str();

  std::string gal_which;
  int gal_n = 1;
  auto* gal = app.add_subcommand("gallery",
                                 "Write a built-in lattice definition");
  gal->fallthrough();
  gal->add_option("which", gal_which, "torus-pi | torus-w | trepalin")
      ->required()
      ->check(CLI::IsMember({"torus-pi", "torus-w", "trepalin"}));
  auto* n_opt = gal->add_option("--n", gal_n, "Family parameter (trepalin)");

  std::string rep_which;
  auto* rep = app.add_subcommand("report", "Bundled end-to-end computations");
  rep->fallthrough();
  rep->add_option("which", rep_which, "theorem-b")
      ->required()
      ->check(CLI::IsMember({"theorem-b"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  using namespace glat;
  OutputFormat of = format == "kv" ? OutputFormat::Kv : OutputFormat::Human;

  if (*show) {
    std::cout << render_show(read_lattice_file(show_file, element_cap), of);
  } else if (*coh) {
    GLattice n = read_lattice_file(coh_file, element_cap);
    std::cout << render_cohomology(n, all_subs, sub_index, coh_dual, of);
  } else if (*fres) {
    GLattice n = read_lattice_file(fres_file, element_cap);
    FlasqueResolution r = flasque_resolution(n);
    if (emit == "summary")
      std::cout << render_flasque_summary(n, r, of);
    else
      write_lattice(std::cout, emit == "s" ? r.s : r.f);
  } else if (*chk) {
    GLattice n = read_lattice_file(check_file, element_cap);
    if (check_what == "permutation") {
      std::cout << render_check_permutation(n, of);
    } else if (check_what == "coflasque") {
      std::cout << render_flasque_check(n, is_coflasque(n), false, of);
    } else if (check_what == "flasque") {
      std::cout << render_flasque_check(n, is_flasque(n), true, of);
    } else {
      ObstructionReport r = stably_permutation_verdict(n, rank_bound,
                                                       coeff_bound);
      std::cout << render_obstruction(n, r, of);
    }
  } else if (*sim) {
    GLattice a = read_lattice_file(sim_a, element_cap);
    GLattice b = read_lattice_file(sim_b, element_cap);
    SimilarityReport r = similarity_verdict(a, b, sim_rank_bound,
                                            sim_coeff_bound);
    std::cout << render_similarity(a, b, r, of);
  } else if (*gal) {
    if (gal_which == "trepalin") {
      write_lattice(std::cout, trepalin_lattice(gal_n));
    } else {
      if (n_opt->count() > 0)
        throw InputError("--n only applies to the trepalin family");
      write_lattice(std::cout,
                    gal_which == "torus-pi" ? torus_pi_lattice()
                                            : torus_w_lattice());
    }
  } else if (*rep) {
    std::cout << theorem_b_report(of);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer lattice computations for finite group actions"};
  try {
    return run(app, argc, argv);
  } catch (const glat::NotFinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const glat::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const glat::Error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
