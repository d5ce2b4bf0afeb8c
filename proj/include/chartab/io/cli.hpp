#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chartab/classify.hpp"
#include "chartab/io/gmodule_text.hpp"
#include "chartab/io/matrix_text.hpp"
#include "chartab/io/slp_text.hpp"
#include "chartab/io/table_text.hpp"
#include "chartab/meataxe.hpp"
#include "chartab/oracle/permgroup.hpp"
#include "chartab/table.hpp"

namespace chartab::io {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

// One job: its kind, the files it reads, its parameters and the files it writes.
struct Manifest {
  std::string job;
  std::vector<std::string> inputs;
  std::map<std::string, std::string> params;
  std::vector<std::string> outputs;

  void check() const {
    for (const auto& f : inputs)
      if (!std::filesystem::exists(f)) fail(ErrorKind::not_found, job + ": input " + f + " does not exist");
  }
};

inline Rational parse_delta(const std::string& s) {
  Rational d;
  if (s.empty() || d.set_str(s, 10) != 0) fail(ErrorKind::validation, "delta '" + s + "' is not a fraction A/B");
  d.canonicalize();
  if (d <= Rational(1, 4) || d > 1) fail(ErrorKind::validation, "delta must lie in (1/4, 1], got " + s);
  return d;
}

namespace detail {

inline std::string row_text(const table::ClassFunction& chi) {
  std::string s = "[";
  for (std::size_t i = 0; i < chi.size(); ++i) s += (i ? ", " : "") + chi[i].str();
  return s + "]";
}

inline std::string map_text(const table::ClassMap& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? " " : "";
    if (m[i].size() == 1) {
      s += std::to_string(m[i][0] + 1);
      continue;
    }
    s += "{";
    for (std::size_t k = 0; k < m[i].size(); ++k) s += (k ? "," : "") + std::to_string(m[i][k] + 1);
    s += "}";
  }
  return s;
}

inline void emit_characters(const std::vector<table::ClassFunction>& chars, const std::string& head_id,
                            const std::string& out_dir, std::ostream& out) {
  if (out_dir.empty()) {
    for (const auto& chi : chars) out << row_text(chi) << "\n";
    return;
  }
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::string path = out_dir + "/chi" + std::to_string(i + 1) + ".txt";
    save_class_function(chars[i], head_id, path);
    out << path << "\n";
  }
}

inline std::vector<ffmat::FFMatrix> load_matrices(const std::vector<std::string>& files) {
  std::vector<ffmat::FFMatrix> out;
  for (const auto& f : files) out.push_back(load_matrix(f));
  return out;
}

inline std::vector<table::ClassFunction> load_characters(const std::vector<std::string>& files, const table::TableHead& h) {
  std::vector<table::ClassFunction> out;
  for (const auto& f : files) out.push_back(load_class_function(f, h));
  return out;
}

}  // namespace detail

// Parses and runs one subcommand. Module errors print "error: <category>: <message>" and give 1;
// command-line errors print the usage and give 2.
inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character table construction toolkit", "chartab"};
  app.require_subcommand(1);
  Manifest job;
  std::vector<std::string> gens, gens2, gens3, gens5, chars, perm_gens;
  std::string slp_file, mat_file, out_dir, out_file, op, config, seed, sub, big, table_file, delta = "99/100", name;
  std::optional<std::int64_t> order;
  int prime = 2;

  auto* slp_eval = app.add_subcommand("slp-eval", "Evaluate a straight-line program on matrices or permutations");
  slp_eval->add_option("--slp", slp_file)->required();
  slp_eval->add_option("--gens", gens)->required();
  slp_eval->add_option("--out", out_dir)->required();

  auto* mat = app.add_subcommand("mat", "Rank, trace or order of a matrix");
  mat->add_option("--op", op)->required()->check(CLI::IsMember({"rank", "trace", "order"}));
  mat->add_option("file", mat_file)->required();

  auto* identify = app.add_subcommand("identify", "Class label of an element from rank and trace invariants");
  identify->add_option("--config", config)->required();
  identify->add_option("--gens2", gens2);
  identify->add_option("--gens3", gens3);
  identify->add_option("--gens5", gens5);
  identify->add_option("--slp", slp_file);
  identify->add_option("--order", order);

  auto* spin = app.add_subcommand("spin", "Standard basis spun from a seed vector");
  spin->add_option("--gens", gens)->required();
  spin->add_option("--seed", seed)->required();
  spin->add_option("--out", out_file);

  auto* fusion = app.add_subcommand("fusion", "Possible class fusions of a subgroup table");
  fusion->add_option("--sub", sub)->required();
  fusion->add_option("--big", big)->required();
  fusion->add_option("--chars", chars);

  auto* powermaps = app.add_subcommand("powermaps", "Possible power maps of a table");
  powermaps->add_option("--table", table_file)->required();
  powermaps->add_option("--prime", prime)->required();

  auto* induce = app.add_subcommand("induce-cyclic", "Characters induced from cyclic subgroups");
  induce->add_option("--table", table_file)->required();
  induce->add_option("--out", out_dir);

  auto* lll = app.add_subcommand("lll", "Irreducibles from LLL reduction of virtual characters");
  lll->add_option("--table", table_file)->required();
  lll->add_option("--chars", chars)->required();
  lll->add_option("--delta", delta);
  lll->add_option("--out", out_dir);

  auto* ortho = app.add_subcommand("ortho", "Check the orthogonality relations of a table");
  ortho->add_option("--table", table_file)->required();

  auto* oracle_table = app.add_subcommand("oracle-table", "Character table of a small permutation group");
  oracle_table->add_option("--perm-gens", perm_gens)->required();
  oracle_table->add_option("--name", name);
  oracle_table->add_option("--delta", delta);
  oracle_table->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    if (slp_eval->parsed()) {
      job = {"slp-eval", {slp_file}, {}, {out_dir}};
      job.inputs.insert(job.inputs.end(), gens.begin(), gens.end());
      job.check();
      slp::Slp s = load_slp(slp_file);
      std::filesystem::create_directories(out_dir);
      std::vector<std::string> texts;
      if (file_kind(read_file(gens.at(0))) == 12) {
        std::vector<Permutation> ps;
        for (const auto& f : gens) ps.push_back(load_permutation(f));
        for (const auto& r : slp::evaluate(s, ps)) texts.push_back(write_permutation(r));
      } else {
        for (const auto& r : slp::evaluate(s, detail::load_matrices(gens))) texts.push_back(write_matrix(r));
      }
      for (std::size_t i = 0; i < texts.size(); ++i) {
        std::string path = out_dir + "/out" + std::to_string(i + 1) + ".txt";
        write_file(path, texts[i]);
        out << path << "\n";
      }
    } else if (mat->parsed()) {
      job = {"mat", {mat_file}, {{"op", op}}, {}};
      job.check();
      auto m = load_matrix(mat_file);
      if (op == "rank") out << ffmat::rank(m) << "\n";
      else if (op == "trace") out << ffmat::trace_lift(m) << "\n";
      else out << ffmat::element_order(m) << "\n";
    } else if (identify->parsed()) {
      job = {"identify", {config}, {}, {}};
      for (auto* v : {&gens2, &gens3, &gens5}) job.inputs.insert(job.inputs.end(), v->begin(), v->end());
      if (!slp_file.empty()) job.inputs.push_back(slp_file);
      if (order && *order < 1) fail(ErrorKind::validation, "--order must be positive");
      job.check();
      auto tree = classify::load_decision_table(config);
      std::map<int, std::vector<ffmat::FFMatrix>> by_char;
      if (!gens2.empty()) by_char[2] = detail::load_matrices(gens2);
      if (!gens3.empty()) by_char[3] = detail::load_matrices(gens3);
      if (!gens5.empty()) by_char[5] = detail::load_matrices(gens5);
      if (by_char.empty()) fail(ErrorKind::arity, "identify needs matrices in at least one characteristic");
      std::optional<slp::Slp> prog;
      if (!slp_file.empty()) prog = load_slp(slp_file);
      classify::MatrixProvider provider(std::move(by_char), prog);
      out << classify::identify_class(provider, tree, order) << "\n";
    } else if (spin->parsed()) {
      job = {"spin", gens, {}, {}};
      job.inputs.push_back(seed);
      job.check();
      auto ms = detail::load_matrices(gens);
      auto sv = load_matrix(seed);
      if (sv.rows() != 1) fail(ErrorKind::shape, "seed file must hold a single row");
      if (&sv.field() != &ms.at(0).field()) fail(ErrorKind::field, "seed and generators lie over different fields");
      meataxe::GModule m(ms.at(0).field(), ms.at(0).rows(), ms);
      auto basis = meataxe::standard_basis(m, sv.row(0));
      std::string text = write_matrix(ffmat::FFMatrix::from_rows(m.field(), basis, m.dim()));
      if (out_file.empty()) out << text;
      else write_file(out_file, text);
    } else if (fusion->parsed()) {
      job = {"fusion", {sub, big}, {}, {}};
      job.inputs.insert(job.inputs.end(), chars.begin(), chars.end());
      job.check();
      auto s = load_table(sub);
      auto b = load_table(big);
      auto fs = table::possible_class_fusions(s, b.head, detail::load_characters(chars, b.head));
      out << "count " << fs.size() << "\n";
      for (const auto& f : fs) out << detail::map_text(f) << "\n";
    } else if (powermaps->parsed()) {
      job = {"powermaps", {table_file}, {{"prime", std::to_string(prime)}}, {}};
      job.check();
      auto t = load_table(table_file);
      auto maps = table::possible_power_maps(t.head, prime, std::nullopt, t.irr);
      out << "count " << maps.size() << "\n";
      for (const auto& m : maps) out << detail::map_text(m) << "\n";
    } else if (induce->parsed()) {
      job = {"induce-cyclic", {table_file}, {}, {out_dir}};
      job.check();
      auto t = load_table(table_file);
      std::vector<int> classes;
      for (std::size_t i = 1; i < t.head.ncls(); ++i) classes.push_back(static_cast<int>(i));
      detail::emit_characters(table::induced_cyclic(t.head, classes), t.head.identifier, out_dir, out);
    } else if (lll->parsed()) {
      job = {"lll", {table_file}, {{"delta", delta}}, {out_dir}};
      job.inputs.insert(job.inputs.end(), chars.begin(), chars.end());
      job.check();
      Rational d = parse_delta(delta);
      auto t = load_table(table_file);
      auto r = table::lll_characters(t.head, detail::load_characters(chars, t.head), d);
      out << "irreducibles " << r.irreducibles.size() << "\n";
      detail::emit_characters(r.irreducibles, t.head.identifier, out_dir, out);
    } else if (ortho->parsed()) {
      job = {"ortho", {table_file}, {}, {}};
      job.check();
      auto rep = table::verify_orthogonality(load_table(table_file));
      for (const auto& v : rep.violations) out << v << "\n";
      if (!rep.ok()) fail(ErrorKind::inconsistency, std::to_string(rep.violations.size()) + " orthogonality violations");
      out << "ok\n";
    } else if (oracle_table->parsed()) {
      job = {"oracle-table", perm_gens, {{"delta", delta}}, {out_file}};
      job.check();
      Rational d = parse_delta(delta);
      std::vector<Permutation> ps;
      for (const auto& f : perm_gens) ps.push_back(load_permutation(f));
      oracle::PermGroup g(ps.at(0).degree(), ps, name);
      table::CharacterTable t{oracle::table_head_of(g), {}};
      t.irr = table::irreducibles_from_head(t.head, d);
      std::string text = write_table(t);
      if (out_file.empty()) out << text;
      else write_file(out_file, text);
    }
  } catch (const Error& e) {
    err << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_ok;
}

}  // namespace chartab::io
