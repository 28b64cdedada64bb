#include "galstab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "galstab/constructions.hpp"
#include "galstab/structure.hpp"

namespace galstab::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "not an integer: " + s);
  }
  if (used != s.size()) throw Error(ErrorKind::Parse, "not an integer: " + s);
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

struct Outcome {
  Json results;
  bool pass = true;
};

Outcome cmd_primes(long m, long p) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  const CyclotomicField field(m);
  Json primes = Json::array();
  for (const auto& beta : decompose_prime(field, p)) primes.push_back(to_json(beta));
  return {Json{{"count", primes.size()}, {"degree", field.degree()}, {"primes", primes}}, true};
}

Outcome cmd_pu(const std::string& l_spec, const std::string& k_spec, long p, long m, const std::string& basis_spec,
               const std::string& emit) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  const CyclotomicField field(m);
  const SubfieldHandle l = parse_subfield(l_spec, field);
  const SubfieldHandle k = parse_subfield(k_spec, field);
  const auto basis = basis_spec.empty() ? default_basis(l, k) : parse_basis(basis_spec, field);
  const EmbeddingMatrix e = embedding_matrix(l, k, basis);
  const PUReport r = build_pu(e, p, m);
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + emit);
    f << to_json(r.group).dump(2) << "\n";
  }
  Json results = to_json(r);
  results["embedding"] = to_json(e);
  return {results, r.stability_verified && r.field_of_definition == r.predicted_field};
}

Outcome cmd_atype(const std::string& group_path, const std::string& partition) {
  const FiniteMatrixGroup g = group_from_json(read_json_file(group_path));
  if (!partition.empty()) {
    const auto blocks = parse_partition(partition, g.dim());
    const ATypeResult r = verify_a_type(g, ATypeDecomposition::coordinate(blocks, g.dim()));
    Json results{{"ok", r.ok}, {"partition", blocks}, {"order", g.order()}};
    if (r.ok)
      results["certificate"] = to_json(r.certificate);
    else
      results["failed"] = Json{{"element", r.failed_element}, {"summand", r.failed_summand}};
    return {results, r.ok};
  }
  const CoordinateSearchResult r = find_a_type_coordinate(g);
  Json results{{"ok", r.found}, {"order", g.order()}};
  if (r.found) {
    results["partition"] = r.partition;
    results["certificate"] = to_json(r.certificate);
  }
  return {results, r.found};
}

Outcome cmd_diag(const std::string& group_path) {
  const FiniteMatrixGroup g = group_from_json(read_json_file(group_path));
  const DiagonalizationResult r = simultaneous_diagonalize_over_Z(g);
  return {to_json(r), r.ok};
}

Json default_fixtures() {
  Json f = Json::array();
  for (auto [m, p] : {std::pair{3L, 3L}, {4L, 2L}, {5L, 5L}})
    f.push_back(Json{{"m", m}, {"p", p}, {"n", 2}, {"random", 60}, {"seed", 1}});
  return Json{{"fixtures", f}};
}

Outcome cmd_audit_prop1(const std::string& path) {
  const Json spec = path.empty() ? default_fixtures() : read_json_file(path);
  if (!spec.contains("fixtures") || !spec["fixtures"].is_array()) throw Error(ErrorKind::Parse, "expected a fixtures array");
  Json out = Json::array();
  bool pass = true;
  for (const auto& fx : spec["fixtures"]) {
    auto get = [&](const char* key, long fallback) {
      if (!fx.contains(key)) return fallback;
      if (!fx[key].is_number_integer()) throw Error(ErrorKind::Parse, std::string("fixture field ") + key);
      return fx[key].get<long>();
    };
    const long m = get("m", 0);
    const long p = get("p", 0);
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "fixture needs m >= 1");
    const CyclotomicField field(m);
    const auto primes = decompose_prime(field, p);
    const long which = get("prime_index", 0);
    if (which < 0 || which >= static_cast<long>(primes.size()))
      throw Error(ErrorKind::InvalidArgument, "prime_index out of range");
    const long n = get("n", 2);
    if (n < 1 || n > 6) throw Error(ErrorKind::InvalidArgument, "fixture dimension must be in 1..6");
    auto mats = torsion_witnesses(field, static_cast<std::size_t>(n), static_cast<std::size_t>(get("random", 60)),
                                  static_cast<std::uint64_t>(get("seed", 1)));
    if (fx.contains("witnesses"))
      for (const auto& w : fx["witnesses"]) mats.push_back(matrix_from_json(w, field));
    std::vector<TorsionWitness> witnesses;
    for (auto& x : mats) witnesses.push_back({std::move(x), primes[static_cast<std::size_t>(which)]});
    const TorsionAuditReport r = torsion_level_audit(witnesses);
    Json entries = Json::array();
    std::size_t in_kernel = 0;
    for (const auto& w : r.entries)
      if (w.in_kernel && w.order > 1) {
        entries.push_back(to_json(w));
        ++in_kernel;
      }
    out.push_back(Json{{"m", m},
                       {"prime", to_json(primes[static_cast<std::size_t>(which)])},
                       {"n", n},
                       {"witnesses", witnesses.size()},
                       {"nontrivial_in_kernel", in_kernel},
                       {"entries", entries},
                       {"pass", r.pass},
                       {"sharp", r.sharp}});
    pass = pass && r.pass;
  }
  return {Json{{"fixtures", out}}, pass};
}

}  // namespace

SubfieldHandle parse_subfield(const std::string& raw, const CyclotomicField& field) {
  const std::string spec = trim(raw);
  const long m = field.conductor();
  if (spec == "Q") return SubfieldHandle::rationals(field);
  auto cyclotomic = [&](long d) {
    if (d < 1 || m % d != 0)
      throw Error(ErrorKind::NotSubfield, "Q(zeta_" + std::to_string(d) + ") is not inside Q(zeta_" + std::to_string(m) + ")");
    return SubfieldHandle::cyclotomic_subfield(field, d);
  };
  if (spec == "Q(i)") return cyclotomic(4);
  const std::string prefix = "Q(zeta_";
  if (spec.rfind(prefix, 0) == 0 && spec.back() == ')')
    return cyclotomic(parse_long(spec.substr(prefix.size(), spec.size() - prefix.size() - 1)));
  if (spec.rfind("fix:", 0) == 0) {
    const auto parts = split(spec.substr(4), ':');
    if (parts.size() != 2) throw Error(ErrorKind::Parse, "expected fix:M:a1,a2,...");
    const long d = parse_long(parts[0]);
    if (d < 1 || m % d != 0) throw Error(ErrorKind::NotSubfield, spec + " does not live in Q(zeta_" + std::to_string(m) + ")");
    std::vector<long> gens;
    for (const auto& a : split(parts[1], ',')) {
      const long x = mod_floor(parse_long(trim(a)), d);
      if (std::gcd(x, d) != 1 && d > 1) throw Error(ErrorKind::NotAUnit, a + " is not a unit mod " + std::to_string(d));
      gens.push_back(d == 1 ? 1 : x);
    }
    const CyclotomicField small(d);
    return embed(SubfieldHandle(small, gens), field);
  }
  throw Error(ErrorKind::Parse, "unknown subfield spec: " + spec);
}

std::vector<std::vector<std::size_t>> parse_partition(const std::string& spec, std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> used(n, false);
  for (const auto& part : split(spec, '|')) {
    std::vector<std::size_t> block;
    for (const auto& tok : split(part, ',')) {
      const long c = parse_long(trim(tok));
      if (c < 1 || c > static_cast<long>(n) || used[static_cast<std::size_t>(c - 1)])
        throw Error(ErrorKind::Parse, "bad coordinate " + tok + " in partition");
      used[static_cast<std::size_t>(c - 1)] = true;
      block.push_back(static_cast<std::size_t>(c - 1));
    }
    if (block.empty()) throw Error(ErrorKind::Parse, "empty block in partition");
    blocks.push_back(block);
  }
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
    throw Error(ErrorKind::Parse, "partition does not cover every coordinate");
  return blocks;
}

std::vector<CycElement> parse_basis(const std::string& spec, const CyclotomicField& field) {
  std::vector<CycElement> out;
  for (const auto& item : split(spec, ';')) {
    std::vector<BigRational> c;
    for (const auto& tok : split(item, ',')) {
      BigRational q;
      if (q.set_str(trim(tok), 10) != 0 || q.get_den() == 0) throw Error(ErrorKind::Parse, "bad coefficient " + tok);
      q.canonicalize();
      c.push_back(q);
    }
    if (c.empty()) throw Error(ErrorKind::Parse, "empty basis element");
    out.push_back(CycElement::from_polynomial(field, c));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois-stable finite matrix groups over cyclotomic fields", "galstab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::map<std::string, Json> inputs;
  long m = 0, p = 0, s = 0, f = 0, n = 0, trials = 0;
  std::uint64_t seed = 0;
  std::string l_spec, k_spec, basis, emit, group, partition, fixtures;

  auto* primes = app.add_subcommand("primes", "primes of Z[zeta_m] over p");
  primes->add_option("--m", m, "conductor")->required();
  primes->add_option("--p", p, "rational prime")->required();

  auto* pu = app.add_subcommand("pu", "the conjugated elementary abelian group V^-1 P V");
  pu->add_option("--L", l_spec, "subfield L")->required();
  pu->add_option("--K", k_spec, "subfield K of L")->required();
  pu->add_option("--p", p, "prime")->required();
  pu->add_option("--m", m, "ambient conductor")->required();
  pu->add_option("--basis", basis, "basis of L over K as power-basis coefficients in Q(zeta_m), e.g. \"1;0,1\"");
  pu->add_option("--emit-group", emit, "write the group to this file");

  auto* atype = app.add_subcommand("atype", "A-type certificate for a group file");
  atype->add_option("--group", group, "group JSON file")->required();
  atype->add_option("--partition", partition, "coordinate partition, e.g. \"1,2|3\"");

  auto* diag = app.add_subcommand("diag", "simultaneous diagonalization over Z");
  diag->add_option("--group", group, "group JSON file")->required();

  auto* bound = app.add_subcommand("bound", "floor(f p^(1-s) / (p-1))");
  bound->add_option("--p", p, "prime")->required();
  bound->add_option("--s", s, "order exponent")->required();
  bound->add_option("--f", f, "ramification index")->required();

  auto* prop1 = app.add_subcommand("audit-prop1", "level versus bound for torsion witnesses");
  prop1->add_option("--fixtures", fixtures, "fixture JSON file");

  auto* cor1 = app.add_subcommand("audit-cor1", "random torsion in GL_n(Z) against congruence levels 2, 3, 4");
  cor1->add_option("--n", n, "dimension")->required();
  cor1->add_option("--trials", trials, "number of samples")->required();
  cor1->add_option("--seed", seed, "seed")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  for (const auto* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    inputs[opt->get_name().substr(2)] = opt->as<std::string>();
  }

  Outcome outcome;
  try {
    if (sub == primes) {
      outcome = cmd_primes(m, p);
    } else if (sub == pu) {
      outcome = cmd_pu(l_spec, k_spec, p, m, basis, emit);
    } else if (sub == atype) {
      outcome = cmd_atype(group, partition);
    } else if (sub == diag) {
      outcome = cmd_diag(group);
    } else if (sub == bound) {
      outcome.results = Json{{"result", minkowski_bound(p, s, f)}};
    } else if (sub == prop1) {
      outcome = cmd_audit_prop1(fixtures);
    } else {
      const Corollary1Report r = corollary1_audit(static_cast<int>(n), static_cast<int>(trials), seed);
      outcome = {to_json(r), r.pass};
    }
  } catch (const Error& e) {
    err << "galstab: " << e.what() << "\n";
    return e.kind() == ErrorKind::CapExceeded ? 3 : 2;
  }

  Json report{{"command", sub->get_name()},
              {"inputs", inputs},
              {"results", outcome.results},
              {"pass", outcome.pass},
              {"version", kVersion}};
  if (sub == bound) report["result"] = outcome.results["result"];
  out << report.dump(2) << "\n";
  return outcome.pass ? 0 : 1;
}

}  // namespace galstab::cli
