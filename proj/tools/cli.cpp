#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "iwahori/cosets.hpp"
#include "iwahori/errors.hpp"
#include "iwahori/report.hpp"
#include "iwahori/verify.hpp"

namespace iwahori::cli {

namespace {

struct Options {
  std::string type;
  std::string lattice = "coroot";
  std::string datum_file;
  int max_len = 3;
  std::string format = "tsv";
  std::string left;
  std::string right;
  std::string sigma_file;
  std::string element;
  std::uint64_t seed = 1;
  bool parallel = false;
  std::size_t cap = 2'000'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    out.push_back(item);
  return out;
}

Int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  Int value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size())
    throw InputError("malformed " + what + " '" + text + "'");
  return value;
}

GroupDatum load_datum(const Options& o) {
  if (!o.datum_file.empty()) {
    if (!o.type.empty())
      throw InputError("give either --datum or --type, not both");
    return validate_datum(parse_datum_json_text(read_file(o.datum_file)));
  }
  if (o.type.empty())
    throw InputError("a datum is required: --type TYPE [--lattice coroot|coweight] or --datum FILE");
  if (o.lattice != "coroot" && o.lattice != "coweight")
    throw InputError("--lattice must be coroot or coweight");
  return validate_datum(RawDatum{o.type, o.lattice});
}

std::vector<Int> lattice_coordinates(const IwahoriWeylGroup& g, const ExtAffineElement& x) {
  return to_std(g.datum().to_lattice_coordinates(x.translation));
}

std::vector<std::vector<Int>> finite_images(const ExtAffineElement& x) {
  const IntMatrix images = x.finite.simple_root_images();
  std::vector<std::vector<Int>> out;
  for (Eigen::Index j = 0; j < images.cols(); ++j)
    out.push_back(to_std(images.col(j)));
  return out;
}

std::vector<Int> kottwitz_coordinates(const IwahoriWeylGroup& g, const ExtAffineElement& x) {
  const KottwitzClass k = g.kottwitz_class(x);
  std::vector<Int> out = to_std(k.free_part);
  for (Int t : to_std(k.torsion_part))
    out.push_back(t);
  return out;
}

int cmd_info(const Options& o, std::ostream& out) {
  const IwahoriWeylGroup g(load_datum(o));
  const RootSystem& rs = g.root_system();
  Table table;
  table.columns = {"cartan_type", "rank",    "weyl_group_order", "omega_size",
                   "lattice_mod_coroots", "torsion", "fundamental_group", "affine_generators"};
  table.add_row({{"cartan_type", rs.type().name()},
                 {"rank", g.rank()},
                 {"weyl_group_order", rs.weyl_group_order()},
                 {"omega_size", g.omega_group().size()},
                 {"lattice_mod_coroots", FiniteAbelianGroup{g.lattice_quotient_factors()}.to_string()},
                 {"torsion", FiniteAbelianGroup{g.datum().torsion_factors()}.to_string()},
                 {"fundamental_group", fundamental_group(rs).to_string()},
                 {"affine_generators", g.num_generators()}});
  write_table(out, table, parse_format(o.format));
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const IwahoriWeylGroup g(load_datum(o));
  struct Row {
    Int length;
    WordFactorization f;
    std::size_t omega;
    ExtAffineElement x;
  };
  std::vector<Row> rows;
  for (const auto& shell : g.enumerate_ball(o.max_len, o.cap, o.parallel))
    for (const ExtAffineElement& x : shell) {
      WordFactorization f = g.reduced_word(x);
      const std::size_t omega = g.omega_index(f.omega);
      rows.push_back(Row{static_cast<Int>(f.word.size()), std::move(f), omega, x});
    }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.length, a.f.word, a.omega) < std::tie(b.length, b.f.word, b.omega);
  });
  Table table;
  table.columns = {"length", "word", "omega", "kottwitz", "translation", "torsion", "finite"};
  for (const Row& r : rows)
    table.add_row({{"length", r.length},
                   {"word", r.f.word},
                   {"omega", r.omega},
                   {"kottwitz", kottwitz_coordinates(g, r.x)},
                   {"translation", lattice_coordinates(g, r.x)},
                   {"torsion", to_std(r.x.torsion)},
                   {"finite", finite_images(r.x)}});
  write_table(out, table, format);
  return kOk;
}

int cmd_word(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const IwahoriWeylGroup g(load_datum(o));
  const ExtAffineElement x = parse_element_spec(g, o.element);
  const WordFactorization f = g.reduced_word(x);
  if (!(g.from_word(f.word, f.omega) == x))
    throw InternalInvariantError("reduced word does not reproduce the element");
  Table table;
  table.columns = {"word", "omega", "length", "omega_translation", "omega_torsion",
                   "omega_finite"};
  table.add_row({{"word", f.word},
                 {"omega", g.omega_index(f.omega)},
                 {"length", g.length(x)},
                 {"omega_translation", lattice_coordinates(g, f.omega)},
                 {"omega_torsion", to_std(f.omega.torsion)},
                 {"omega_finite", finite_images(f.omega)}});
  write_table(out, table, format);
  return kOk;
}

int cmd_dcosets(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const IwahoriWeylGroup g(load_datum(o));
  const ParabolicSubgroup left = parabolic(g, parse_index_list(o.left));
  const ParabolicSubgroup right = parabolic(g, parse_index_list(o.right));
  const auto reps =
      enumerate_double_cosets(g, left, right, g.enumerate_ball(o.max_len, o.cap, o.parallel));
  Table table;
  table.columns = {"x0_word", "omega", "length", "coset_size_in_ball", "truncated"};
  for (const DoubleCosetRep& rep : reps)
    table.add_row({{"x0_word", rep.word},
                   {"omega", rep.omega},
                   {"length", rep.length},
                   {"coset_size_in_ball", rep.size_in_ball},
                   {"truncated", rep.truncated}});
  write_table(out, table, format);
  return kOk;
}

int cmd_descent(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const IwahoriWeylGroup g(load_datum(o));
  if (o.sigma_file.empty())
    throw InputError("descent needs --sigma FILE");
  nlohmann::json sj;
  try {
    sj = nlohmann::json::parse(read_file(o.sigma_file));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid sigma JSON: ") + e.what());
  }
  const DiagramAutomorphism sigma = parse_sigma_json(g, sj);
  const ParabolicSubgroup left = parabolic(g, parse_index_list(o.left));
  const ParabolicSubgroup right = parabolic(g, parse_index_list(o.right));
  const DescentReport report = descent_check(g, sigma, left, right, o.max_len, o.cap);
  Table table;
  table.columns = {"cosets", "stable_cosets", "fixed_representatives", "fixed_elements",
                   "counterexamples", "ok"};
  table.add_row({{"cosets", report.cosets},
                 {"stable_cosets", report.stable_cosets},
                 {"fixed_representatives", report.fixed_representatives},
                 {"fixed_elements", report.fixed_elements},
                 {"counterexamples", report.counterexamples.size()},
                 {"ok", report.ok()}});
  write_table(out, table, format);
  return report.ok() ? kOk : kPropertyFailure;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  bool ok = true;
  auto timed = [&](const std::string& label, auto&& run) {
    const auto start = Clock::now();
    auto results = run();
    err << label << ": " << std::chrono::duration<double>(Clock::now() - start).count() << " s\n";
    return results;
  };
  auto suite = [&](const GroupDatum& d) {
    const IwahoriWeylGroup g(d);
    const std::string name = d.root_system().type().name() + " " + d.to_json()["lattice"].dump();
    out << "# properties " << name << " max_len=" << o.max_len << " seed=" << o.seed << '\n';
    for (const auto& r :
         timed("properties " + name, [&] { return verify::property_suite(g, o.max_len, o.seed); })) {
      verify::print_result(out, r.name, r);
      ok = ok && r.passed;
    }
  };
  if (!o.datum_file.empty() || !o.type.empty()) {
    suite(load_datum(o));
  } else {
    out << "# acceptance criteria\n";
    for (const verify::Criterion& c : verify::acceptance_criteria()) {
      const auto r = timed("criterion " + std::to_string(c.number), c.run);
      verify::print_result(out, std::to_string(c.number) + " " + c.name, r);
      ok = ok && r.passed;
    }
    for (const GroupDatum& d : verify::default_data())
      suite(d);
  }
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? kOk : kPropertyFailure;
}

void add_datum_options(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "Cartan type, e.g. A2, C2, G2");
  sub->add_option("--lattice", o.lattice, "lattice preset: coroot or coweight");
  sub->add_option("--datum", o.datum_file, "datum JSON file");
}

void add_table_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json or tsv");
  sub->add_option("--cap", o.cap, "element cap for enumeration")->check(CLI::PositiveNumber);
  sub->add_flag("--parallel", o.parallel, "enumerate shells in parallel");
}

}  // namespace

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "none")
    return out;
  for (const std::string& item : split(text, ','))
    out.push_back(static_cast<int>(parse_int(item, "index")));
  return out;
}

ExtAffineElement parse_element_spec(const IwahoriWeylGroup& g, const std::string& spec) {
  const GroupDatum& d = g.datum();
  IntVector t = IntVector::Zero(g.rank());
  std::vector<int> word;
  Int tor = 0;
  std::istringstream in(spec);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw InputError("malformed element spec token '" + token + "'");
    const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    if (key == "t") {
      const auto items = value.empty() ? std::vector<std::string>{} : split(value, ',');
      if (static_cast<int>(items.size()) != g.rank())
        throw InputError("t= needs " + std::to_string(g.rank()) + " lattice coordinates");
      for (int j = 0; j < g.rank(); ++j)
        t(j) = parse_int(items[static_cast<std::size_t>(j)], "coordinate");
    } else if (key == "w") {
      word = parse_index_list(value);
      for (int i : word)
        if (i < 1 || i > g.rank())
          throw InputError("finite word letters must lie in 1.." + std::to_string(g.rank()));
    } else if (key == "tor") {
      tor = parse_int(value, "torsion index");
      if (tor < 0 || tor >= d.torsion_order())
        throw InputError("torsion index out of range 0.." + std::to_string(d.torsion_order() - 1));
    } else {
      throw InputError("unknown element spec key '" + key + "'");
    }
  }
  const ExtAffineElement translation = g.lattice_translation(t);
  const ExtAffineElement torsion = g.torsion_element(d.torsion_from_index(tor));
  const ExtAffineElement finite = g.finite_element(finite_from_word(g.root_system(), word));
  return g.multiply(g.multiply(translation, torsion), finite);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iwahori-Weyl group computations", "iwahori"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "summary of a datum");
  add_datum_options(info, o);
  info->add_option("--format", o.format, "json or tsv");

  auto* enumerate = app.add_subcommand("enumerate", "all elements up to a length");
  add_datum_options(enumerate, o);
  add_table_options(enumerate, o);
  enumerate->add_option("--max-len", o.max_len, "maximal length (default 3)")
      ->check(CLI::NonNegativeNumber);

  auto* word = app.add_subcommand("word", "canonical reduced word of an element");
  add_datum_options(word, o);
  word->add_option("--format", o.format, "json or tsv");
  word->add_option("element", o.element, "e.g. \"t=1,0 w=1,2 tor=0\"")->required();

  auto* dcosets = app.add_subcommand("dcosets", "double cosets meeting a ball");
  add_datum_options(dcosets, o);
  add_table_options(dcosets, o);
  dcosets->add_option("--max-len", o.max_len, "maximal length (default 3)")
      ->check(CLI::NonNegativeNumber);
  dcosets->add_option("--left", o.left, "left parabolic indices, e.g. 1,2");
  dcosets->add_option("--right", o.right, "right parabolic indices");

  auto* descent = app.add_subcommand("descent", "sigma-stable double cosets");
  add_datum_options(descent, o);
  add_table_options(descent, o);
  descent->add_option("--max-len", o.max_len, "maximal length (default 3)")
      ->check(CLI::NonNegativeNumber);
  descent->add_option("--left", o.left, "left parabolic indices");
  descent->add_option("--right", o.right, "right parabolic indices");
  descent->add_option("--sigma", o.sigma_file, "sigma JSON file");

  auto* verify = app.add_subcommand("verify", "run the property checks");
  add_datum_options(verify, o);
  verify->add_option("--max-len", o.max_len, "ball radius for the property suites")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "RNG seed for sampled checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*info)
      return cmd_info(o, out);
    if (*enumerate)
      return cmd_enumerate(o, out);
    if (*word)
      return cmd_word(o, out);
    if (*dcosets)
      return cmd_dcosets(o, out);
    if (*descent)
      return cmd_descent(o, out);
    if (verify->count("--max-len") == 0)
      o.max_len = 4;
    return cmd_verify(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const NotFinite& e) {
    err << "error: " << e.what() << '\n';
    return kNotFinite;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kPropertyFailure;
  }
}

}  // namespace iwahori::cli
