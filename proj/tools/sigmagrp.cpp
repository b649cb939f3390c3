// Command-line front end: analyze, sylowizers, verify, catalog gen.
//
// Exit status: 0 no counterexample, 1 counterexample found, 2 usage or
// parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "sigmagrp/sigmagrp.hpp"

namespace fs = std::filesystem;
using namespace sigmagrp;

namespace
{

std::string read_file(fs::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t workers_from_env()
{
  if (char const *env = std::getenv("SIGMAGRP_WORKERS")) {
    char *end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0')
      return v;
  }
  return 1;
}

std::vector<std::string> split_list(std::string const &text, char sep)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    auto t = std::string(detail::trim(item));
    if (!t.empty())
      out.push_back(t);
  }
  return out;
}

Subject load_subject(std::string const &path)
{
  auto file = parse_group_file(read_file(path));
  auto group = build_group(file);
  if (!group->materialized())
    throw GroupError("order " + std::to_string(group->order()) +
                     " exceeds the materialization cap " +
                     std::to_string(group->order_cap()));
  return Subject(file.name, group);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_orders(SubgroupLattice const &l, std::vector<std::size_t> const &ids)
{
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    out += (i ? ", " : "") + std::to_string(l[ids[i]].order());
  return out;
}

int cmd_analyze(std::string const &path, std::string const &sigma_text)
{
  auto subject = load_subject(path);
  auto const &l = subject.lattice;
  SigmaProfile profile(sigma_parse(sigma_text), subject.group->order());

  std::cout << "group: " << subject.name << "\n"
            << "degree: " << subject.group->degree() << "\n"
            << "order: " << subject.group->order() << "\n"
            << "subgroups: " << l.size() << "\n"
            << "sigma: " << profile.partition().to_string() << "\n"
            << "sigma(G):\n";
  for (std::size_t b = 0; b < profile.active().size(); ++b) {
    auto const &a = profile.active()[b];
    auto halls = hall_indices(l, a.block);
    std::cout << "  [" << b + 1 << "] primes " << a.label() << ": " << halls.size()
              << " Hall subgroup(s) of order "
              << (halls.empty() ? std::string("-") : std::to_string(l[halls.front()].order()))
              << ", O^sigma_i(G) of order " << o_upper_sigma(l, a.block).order() << "\n";
  }
  std::cout << "complete Hall sigma-sets: " << complete_hall_sets(l, profile).size() << "\n"
            << "sigma-full of Sylow type: "
            << yes_no(is_sigma_full_of_sylow_type(l, profile)) << "\n";

  auto const &whole = l[l.whole_index()];
  auto ss = is_supersoluble(l);
  std::cout << "cyclic: " << yes_no(is_cyclic(whole)) << "\n"
            << "abelian: " << yes_no(is_abelian(whole)) << "\n"
            << "nilpotent: " << yes_no(is_nilpotent(whole)) << "\n"
            << "soluble: " << yes_no(is_soluble(whole)) << "\n"
            << "supersoluble: " << yes_no(ss.supersoluble) << "\n"
            << "chief factors:";
  for (auto f : chief_series(l).factor_orders)
    std::cout << " " << f;
  std::cout << "\np-nilpotent:";
  for (auto p : prime_divisors(subject.group->order()))
    std::cout << " " << p << "=" << yes_no(is_p_nilpotent(l, p));
  std::cout << "\nminimal normal subgroups: "
            << (subject.group->order() > 1 ? join_orders(l, minimal_normal_indices(l)) : "-")
            << "\nFrattini subgroup order: " << frattini(l).order() << "\n";
  return 0;
}

int cmd_sylowizers(std::string const &path, std::string const &sigma_text,
                   std::size_t block, std::string const &subgroup_text)
{
  auto subject = load_subject(path);
  auto const &l = subject.lattice;
  SigmaProfile profile(sigma_parse(sigma_text), subject.group->order());
  if (block < 1 || block > profile.active().size())
    throw ParseError("--block must be between 1 and " +
                     std::to_string(profile.active().size()) + " (the blocks of sigma(G))");
  auto const &active = profile.active()[block - 1];

  std::vector<Permutation> gens;
  for (auto const &g : detail::split_generators(subgroup_text))
    gens.push_back(parse_permutation(g, subject.group->degree()));
  auto r = Subgroup::generated_by(subject.group, gens);

  auto syl = sylowizers({l, r, active.block});
  std::vector<std::size_t> halls;
  for (auto const &a : profile.active()) {
    auto h = hall_indices(l, a.block);
    halls.insert(halls.end(), h.begin(), h.end());
  }

  std::cout << "R: order " << r.order() << ", block " << active.label() << "\n"
            << "sylowizers: " << syl.size() << "\n";
  for (auto const &s : syl) {
    bool cperm = std::all_of(halls.begin(), halls.end(), [&](std::size_t q) {
      return is_c_permutable(s, l[q]).permutable;
    });
    std::cout << "  order " << s.order() << ", index " << s.index()
              << (is_sigma_i_number(s.index(), active.block) ? " (sigma_i-number)" : "")
              << ", c-permutable with all Hall subgroups: " << yes_no(cperm)
              << ", gens:";
    for (auto const &g : s.generator_cycles())
      std::cout << " " << g;
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(std::vector<std::string> const &paths, std::string const &builtin,
               std::string const &statements, std::size_t max_blocks,
               std::string const &normal_e, bool json, std::size_t workers)
{
  std::vector<CatalogEntry> catalog;
  if (!builtin.empty()) {
    for (auto const &f : builtin_catalog(builtin))
      catalog.push_back({"builtin:" + f.name, emit_group_file(f)});
  }
  for (auto const &p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (auto const &entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().filename().string().front() != '.')
          files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (auto const &f : files)
        catalog.push_back({f.string(), read_file(f)});
    } else {
      catalog.push_back({p, read_file(p)});
    }
  }
  if (catalog.empty())
    throw ParseError("nothing to verify: give group files, a directory or --builtin");

  RunConfig config;
  config.max_blocks = max_blocks;
  config.workers = workers;
  config.statements.clear();
  for (auto const &id : split_list(statements, ',')) {
    auto s = statement_from_id(id);
    if (!s)
      throw ParseError("unknown statement \"" + id + "\"");
    config.statements.push_back(*s);
  }
  if (!normal_e.empty())
    config.normal_e = detail::split_generators(normal_e);

  auto result = run_catalog(catalog, config);
  for (auto const &r : result.reports)
    std::cout << (json ? to_line(r) : to_text(r)) << "\n";

  for (auto const &[label, err] : result.summary.skipped)
    std::cerr << "skipped " << label << ": " << err << "\n";
  for (auto const &[id, c] : result.summary.by_statement) {
    std::cerr << id << ": verified " << c.verified << ", hypothesis-not-met "
              << c.hypothesis_not_met << ", counterexample " << c.counterexample
              << ", cases " << c.cases_checked << ", positive " << c.positive_cases << "\n";
  }
  if (!result.summary.skipped.empty() && result.reports.empty())
    return 2;
  return result.exit_status();
}

int cmd_catalog_gen(std::string const &families, std::string const &out_dir)
{
  auto files = builtin_catalog(families);
  fs::create_directories(out_dir);
  for (auto const &f : files) {
    auto path = fs::path(out_dir) / (f.name + ".grp");
    std::ofstream out(path);
    if (!out)
      throw ParseError("cannot write " + path.string());
    out << emit_group_file(f);
    std::cout << path.string() << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Sigma-subgroup computations and statement verification over "
               "small permutation groups"};
  app.require_subcommand(1);

  std::string file, sigma, subgroup, families, out_dir, statements = "L2.1,L2.2,L2.3,L2.4,T2.5,T2.6";
  std::string builtin, normal_e;
  std::vector<std::string> paths;
  std::size_t block = 0, max_blocks = 3, workers = workers_from_env();
  bool json = false;

  auto *analyze = app.add_subcommand("analyze", "Print sigma(G), Hall sets and classifiers");
  analyze->add_option("file", file, "Group file")->required();
  analyze->add_option("--sigma", sigma, "Sigma partition, e.g. 2|3|5,7")->required();

  auto *syl = app.add_subcommand("sylowizers", "List the sigma_i-sylowizers of a subgroup");
  syl->add_option("file", file, "Group file")->required();
  syl->add_option("--sigma", sigma, "Sigma partition")->required();
  syl->add_option("--block", block, "1-based index into sigma(G)")->required();
  syl->add_option("--subgroup", subgroup, "Generators, e.g. \"(1 2), (3 4)\"")->required();

  auto *verify = app.add_subcommand("verify", "Check the statements over a catalog");
  verify->add_option("paths", paths, "Group files or directories");
  verify->add_option("--builtin", builtin, "Built-in families, e.g. \"" +
                                             default_catalog_families + "\"");
  verify->add_option("--statements", statements, "Comma-separated statement ids")->capture_default_str();
  verify->add_option("--max-blocks", max_blocks, "Largest number of sigma blocks")->capture_default_str();
  verify->add_option("--normal-e", normal_e, "Generators of E for T2.6");
  verify->add_flag("--json", json, "Emit one JSON record per report");
  verify->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str();

  auto *catalog = app.add_subcommand("catalog", "Catalog utilities");
  catalog->require_subcommand(1);
  auto *gen = catalog->add_subcommand("gen", "Write built-in families as group files");
  gen->add_option("--families", families, "Family list, e.g. \"S3..S5, A4, D8\"")->required();
  gen->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(file, sigma);
    if (syl->parsed())
      return cmd_sylowizers(file, sigma, block, subgroup);
    if (verify->parsed())
      return cmd_verify(paths, builtin, statements, max_blocks, normal_e, json, workers);
    if (gen->parsed())
      return cmd_catalog_gen(families, out_dir);
  } catch (std::exception const &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
