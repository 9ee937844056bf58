#include "ringnc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "ringnc/arith.hpp"
#include "ringnc/dominance.hpp"
#include "ringnc/error.hpp"
#include "ringnc/network.hpp"
#include "ringnc/network_io.hpp"
#include "ringnc/partition.hpp"

namespace ringnc::cli {

namespace {

constexpr const char* kDominates = "\xe2\xaa\xaf";  // ⪯

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// (key, value) rows of a golden file; `#` lines and blank lines are skipped.
std::vector<std::pair<std::string, std::string>> golden_rows(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("golden row without ':' in " + path, 0);
    auto value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(' '));
    rows.emplace_back(line.substr(0, colon), value);
  }
  return rows;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::uint64_t parse_budget(const std::string& text) {
  std::uint64_t value = 0;
  try {
    if (auto caret = text.find('^'); caret != std::string::npos) {
      if (text.substr(0, caret) != "2") throw ParseError("budget must be N or 2^N", 0);
      auto e = std::stoul(text.substr(caret + 1));
      if (e > 63) throw LimitError("budget exponent above 63");
      value = std::uint64_t{1} << e;
    } else {
      value = std::stoull(text);
    }
  } catch (const std::logic_error&) {
    throw ParseError("budget must be N or 2^N", 0);
  }
  if (value == 0) throw DomainError("budget must be positive");
  return value;
}

void print_partitions(const std::vector<Partition>& ps, std::ostream& out) {
  for (const auto& p : ps) out << to_string(p) << "\n";
}

PartitionRing field_product(const std::string& text) {
  auto r = as_partition_ring(canonicalize(parse_ring(text)));
  if (!r) throw DomainError(text + " is not a product of finite fields");
  return *r;
}

std::uint64_t zmod_order(const std::string& text) {
  auto r = parse_ring(text);
  if (r.is<IntegersMod>()) return r.as<IntegersMod>().n;
  if (r.is<PrimeField>()) return r.as<PrimeField>().p;
  throw DomainError(text + " is not Z(n)");
}

void print_verdict(const char* label, const DominanceVerdict& v, bool chains, std::ostream& out) {
  out << label << ": " << describe(v) << "\n";
  if (!chains) return;
  for (const auto& chain : v.certificate) {
    for (const auto& step : chain) out << "  " << describe(step) << "\n";
    out << "  --\n";
  }
}

std::string right_label() { return std::string("right") + kDominates + "left"; }
std::string left_label() { return std::string("left") + kDominates + "right"; }

}  // namespace

std::string default_data_path(const std::string& file) {
  return std::string(RINGNC_DATA_DIR) + "/" + file;
}

int verify_table1(unsigned max_k, const std::string& golden_path, std::ostream& out) {
  if (max_k < 1 || max_k > 30) throw DomainError("--max-k must be in [1, 30]");
  auto rows = golden_rows(golden_path);
  for (unsigned k = 1; k <= max_k; ++k) {
    std::vector<std::string> computed;
    for (const auto& p : maximal_partitions(k)) computed.push_back(to_string(p));
    const std::string line = join(computed);
    if (k > rows.size()) {
      out << "MISMATCH k=" << k << ": golden file has no row\n";
      return 1;
    }
    const auto& [key, expected] = rows[k - 1];
    if (key != std::to_string(k) || join(split_words(expected)) != line) {
      out << "MISMATCH k=" << k << "\n  golden:   " << key << ": " << expected
          << "\n  computed: " << k << ": " << line << "\n";
      return 1;
    }
    out << k << ": " << line << "\n";
  }
  out << "OK: " << max_k << " rows checked\n";
  return 0;
}

int verify_example513(const std::string& golden_path, std::ostream& out) {
  auto rows = golden_rows(golden_path);
  for (const auto& [key, expected] : rows) {
    std::vector<std::string> computed;
    auto want = split_words(expected);
    if (key.rfind("p^", 0) == 0) {
      const auto k = static_cast<unsigned>(std::stoul(key.substr(2)));
      for (const auto& a : maximal_partitions(k)) {
        if (a.length() > 1) computed.push_back(render_symbolic(a));
      }
    } else {
      for (const auto& r : maximal_rings(parse_factored_size(key))) computed.push_back(to_string(r));
      // the listing order is not significant for mixed sizes
      std::sort(computed.begin(), computed.end());
      std::sort(want.begin(), want.end());
    }
    if (computed != want) {
      out << "MISMATCH " << key << "\n  golden:   " << join(want) << "\n  computed: " << join(computed)
          << "\n";
      return 1;
    }
    out << key << ": " << join(computed) << "\n";
  }
  out << "OK: " << rows.size() << " rows checked\n";
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scalar linear network coding over finite commutative rings", "ringnc"};
  app.require_subcommand(1);

  unsigned k = 0, n = 0, max_k = 30, jobs = 1;
  std::string left, right, size_text, file, code_file, ring_text, golden, budget_text = "2^26";

  auto* partitions = app.add_subcommand("partitions", "integer partitions under division");
  partitions->require_subcommand(1);
  auto* p_enum = partitions->add_subcommand("enumerate", "all partitions of k, reverse-lexicographic");
  p_enum->add_option("--k", k)->required();
  auto* p_max = partitions->add_subcommand("maximal", "maximal partitions of k");
  p_max->add_option("--k", k)->required();
  auto* p_div = partitions->add_subcommand("divides", "whether --left divides --right");
  p_div->add_option("--left", left)->required();
  p_div->add_option("--right", right)->required();

  auto* rings = app.add_subcommand("rings", "catalog rings");
  rings->require_subcommand(1);
  auto* r_max = rings->add_subcommand("maximal", "maximal commutative rings of a size");
  r_max->add_option("--size", size_text)->required();
  auto* r_parse = rings->add_subcommand("parse", "parse and describe a ring expression");
  r_parse->add_option("--ring", ring_text)->required();
  auto* r_elems = rings->add_subcommand("elements", "list elements in canonical order");
  r_elems->add_option("--ring", ring_text)->required();

  auto* dominance = app.add_subcommand("dominance", "dominance between rings");
  dominance->require_subcommand(1);
  std::vector<CLI::App*> dom_cmds;
  for (const char* name : {"fields", "zmod", "catalog"}) {
    auto* c = dominance->add_subcommand(name);
    c->add_option("--left", left)->required();
    c->add_option("--right", right)->required();
    dom_cmds.push_back(c);
  }
  dom_cmds[0]->description("products of finite fields");
  dom_cmds[1]->description("Z(n) against Z(m)");
  dom_cmds[2]->description("any two catalog rings, with certificates");

  auto* network = app.add_subcommand("network", "networks and scalar linear codes");
  network->require_subcommand(1);
  auto* gen = network->add_subcommand("gen", "print a generated network as JSON");
  gen->require_subcommand(1);
  auto* g_choose = gen->add_subcommand("choose-two", "the n-choose-two network");
  g_choose->add_option("--n", n)->required();
  auto* g_two_six = gen->add_subcommand("two-six", "the two-six network");
  auto* solve = network->add_subcommand("solve", "exhaustive scalar linear search");
  solve->add_option("--file", file)->required();
  solve->add_option("--ring", ring_text)->required();
  solve->add_option("--budget", budget_text, "assignment cap, N or 2^N")->capture_default_str();
  solve->add_option("--jobs", jobs)->capture_default_str();
  auto* nverify = network->add_subcommand("verify", "check a code against a network");
  nverify->add_option("--file", file)->required();
  nverify->add_option("--code", code_file)->required();
  auto* transform = network->add_subcommand("transform", "carry a solution to a dominating ring");
  transform->add_option("--file", file)->required();
  transform->add_option("--code", code_file)->required();
  transform->add_option("--ring", ring_text)->required();

  auto* verify = app.add_subcommand("verify", "reproduce bundled tables");
  verify->require_subcommand(1);
  auto* v_table = verify->add_subcommand("table1", "maximal partitions for k <= 30");
  v_table->add_option("--max-k", max_k)->capture_default_str();
  v_table->add_option("--golden", golden);
  auto* v_513 = verify->add_subcommand("example513", "maximal rings of the bundled sizes");
  v_513->add_option("--golden", golden);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (p_enum->parsed()) {
      print_partitions(enumerate_partitions(k), out);
    } else if (p_max->parsed()) {
      print_partitions(maximal_partitions(k), out);
    } else if (p_div->parsed()) {
      auto b = parse_partition(left), a = parse_partition(right);
      out << to_string(b) << " divides " << to_string(a) << ": " << (divides(b, a) ? "YES" : "NO")
          << "\n";
    } else if (r_max->parsed()) {
      for (const auto& r : maximal_rings(parse_factored_size(size_text))) out << to_string(r) << "\n";
    } else if (r_parse->parsed()) {
      auto r = parse_ring(ring_text);
      out << "ring: " << to_string(r) << "\n"
          << "canonical: " << to_string(canonicalize(r)) << "\n"
          << "size: " << ringnc::size(r) << "\n"
          << "characteristic: " << characteristic(r) << "\n"
          << "field: " << (is_field(r) ? "yes" : "no") << "\n";
    } else if (r_elems->parsed()) {
      for (const auto& e : elements(Ring(parse_ring(ring_text)))) out << e.to_string() << "\n";
    } else if (dom_cmds[0]->parsed()) {
      auto s = field_product(left), r = field_product(right);
      print_verdict(left_label().c_str(), field_product_dominates(s, r), false, out);
      print_verdict(right_label().c_str(), field_product_dominates(r, s), false, out);
    } else if (dom_cmds[1]->parsed()) {
      auto a = zmod_order(left), b = zmod_order(right);
      print_verdict(left_label().c_str(), zmod_dominates(a, b), false, out);
      print_verdict(right_label().c_str(), zmod_dominates(b, a), false, out);
    } else if (dom_cmds[2]->parsed()) {
      auto s = parse_ring(left), r = parse_ring(right);
      print_verdict(left_label().c_str(), catalog_dominates(s, r), true, out);
      print_verdict(right_label().c_str(), catalog_dominates(r, s), true, out);
    } else if (g_choose->parsed()) {
      out << network_to_json(choose_two(n)) << "\n";
    } else if (g_two_six->parsed()) {
      out << network_to_json(two_six()) << "\n";
    } else if (solve->parsed()) {
      auto net = parse_network(read_file(file));
      SolveOptions opts{parse_budget(budget_text), jobs};
      auto code = solve_brute(net, parse_ring(ring_text), opts);
      if (!code) {
        out << "UNSOLVABLE (search exhausted)\n";
        return 1;
      }
      out << code_to_json(*code) << "\n";
    } else if (nverify->parsed()) {
      auto net = parse_network(read_file(file));
      auto code = parse_code(read_file(code_file));
      if (auto bad = verify_report(net, code)) {
        out << "NOT A SOLUTION: " << *bad << "\n";
        return 1;
      }
      out << "VERIFIED\n";
    } else if (transform->parsed()) {
      auto net = parse_network(read_file(file));
      auto code = parse_code(read_file(code_file));
      auto verdict = catalog_dominates(code.ring, parse_ring(ring_text));
      if (verdict.relation != Relation::Dominates) {
        out << "NOT TRANSFORMABLE: " << describe(verdict) << "\n";
        return 1;
      }
      out << code_to_json(transport(net, code, verdict)) << "\n";
    } else if (v_table->parsed()) {
      return verify_table1(max_k, golden.empty() ? default_data_path("table1.txt") : golden, out);
    } else if (v_513->parsed()) {
      return verify_example513(golden.empty() ? default_data_path("example513.txt") : golden, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ringnc::cli
