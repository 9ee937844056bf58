#include <algorithm>
#include <cstdio>
#include <set>

#include "network_index.hpp"
#include "ringnc/arith.hpp"
#include "ringnc/error.hpp"
#include "ringnc/network.hpp"

namespace ringnc {

std::vector<std::string> validate(const Network& n) {
  std::vector<std::string> defects;
  std::set<std::string> nodes, edge_ids, message_ids;
  for (const auto& v : n.nodes) {
    if (!nodes.insert(v).second) defects.push_back("duplicate node: " + v);
  }
  for (const auto& e : n.edges) {
    if (!edge_ids.insert(e.id).second) defects.push_back("duplicate edge: " + e.id);
    if (!nodes.count(e.tail)) defects.push_back("unknown tail: edge " + e.id + " starts at " + e.tail);
    if (!nodes.count(e.head)) defects.push_back("unknown head: edge " + e.id + " ends at " + e.head);
  }
  for (const auto& m : n.messages) {
    if (!message_ids.insert(m.id).second) defects.push_back("duplicate message: " + m.id);
    if (!nodes.count(m.source)) {
      defects.push_back("unknown source: message " + m.id + " originates at " + m.source);
    }
  }
  std::set<std::string> receiver_nodes;
  for (const auto& r : n.receivers) {
    if (!nodes.count(r.node)) defects.push_back("unknown receiver node: " + r.node);
    if (!receiver_nodes.insert(r.node).second) defects.push_back("duplicate receiver: " + r.node);
    for (const auto& d : r.demands) {
      if (!message_ids.count(d)) defects.push_back("unknown demand: receiver " + r.node + " demands " + d);
    }
  }
  // Kahn's algorithm on nodes; whatever is left sits on or behind a cycle
  std::map<std::string, std::size_t> indegree;
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& v : nodes) indegree[v] = 0;
  for (const auto& e : n.edges) {
    if (!nodes.count(e.tail) || !nodes.count(e.head)) continue;
    ++indegree[e.head];
    out[e.tail].push_back(e.head);
  }
  std::vector<std::string> ready;
  for (const auto& [v, d] : indegree) {
    if (d == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (seen != nodes.size()) {
    std::string stuck;
    for (const auto& [v, d] : indegree) {
      if (d > 0) stuck += (stuck.empty() ? "" : ", ") + v;
    }
    defects.push_back("cycle: nodes " + stuck + " are not in any topological order");
  }
  return defects;
}

std::vector<Input> inputs(const Network& n, const std::string& node) {
  std::vector<Input> out;
  std::vector<std::string> ms, es;
  for (const auto& m : n.messages) {
    if (m.source == node) ms.push_back(m.id);
  }
  for (const auto& e : n.edges) {
    if (e.head == node) es.push_back(e.id);
  }
  std::sort(ms.begin(), ms.end());
  std::sort(es.begin(), es.end());
  for (auto& m : ms) out.push_back({Input::Kind::Message, std::move(m)});
  for (auto& e : es) out.push_back({Input::Kind::Edge, std::move(e)});
  return out;
}

namespace detail {

NetworkIndex index_network(const Network& n) {
  auto defects = validate(n);
  if (!defects.empty()) {
    std::string all = "invalid network:";
    for (const auto& d : defects) all += " " + d + ";";
    throw DomainError(all);
  }
  NetworkIndex ix;
  for (std::size_t i = 0; i < n.messages.size(); ++i) ix.message_pos[n.messages[i].id] = i;
  for (std::size_t i = 0; i < n.edges.size(); ++i) ix.edge_pos[n.edges[i].id] = i;

  auto refs = [&](const std::string& node) {
    std::vector<InputRef> out;
    for (const auto& in : inputs(n, node)) {
      if (in.kind == Input::Kind::Message) {
        out.push_back({true, ix.message_pos.at(in.id)});
      } else {
        out.push_back({false, ix.edge_pos.at(in.id)});
      }
    }
    return out;
  };
  std::map<std::string, std::vector<InputRef>> node_inputs;
  for (const auto& v : n.nodes) node_inputs[v] = refs(v);
  for (const auto& e : n.edges) ix.edge_inputs.push_back(node_inputs.at(e.tail));
  for (const auto& r : n.receivers) {
    ix.receiver_inputs.push_back(node_inputs.at(r.node));
    std::vector<std::size_t> d;
    for (const auto& m : r.demands) d.push_back(ix.message_pos.at(m));
    ix.demands.push_back(std::move(d));
  }

  // edges become ready once every edge into their tail is placed
  std::map<std::string, std::size_t> pending;
  std::map<std::string, std::vector<std::size_t>> out_edges;
  for (const auto& v : n.nodes) pending[v] = 0;
  for (std::size_t i = 0; i < n.edges.size(); ++i) {
    ++pending[n.edges[i].head];
    out_edges[n.edges[i].tail].push_back(i);
  }
  std::set<std::pair<std::string, std::size_t>> ready;
  for (std::size_t i = 0; i < n.edges.size(); ++i) {
    if (pending[n.edges[i].tail] == 0) ready.insert({n.edges[i].id, i});
  }
  while (!ready.empty()) {
    auto [id, i] = *ready.begin();
    ready.erase(ready.begin());
    ix.topo.push_back(i);
    if (--pending[n.edges[i].head] == 0) {
      for (auto j : out_edges[n.edges[i].head]) ready.insert({n.edges[j].id, j});
    }
  }
  return ix;
}

TransferVector input_vector(const InputRef& in, const std::vector<TransferVector>& edges,
                            std::size_t message_count, const Ring& ring) {
  if (!in.message) return edges[in.index];
  TransferVector unit(message_count, ring.zero());
  unit[in.index] = ring.one();
  return unit;
}

std::vector<TransferVector> edge_transfers(const Network& n, const NetworkIndex& ix,
                                           const Ring& ring, const ScalarLinearCode& c) {
  const std::size_t m = n.messages.size();
  std::vector<TransferVector> out(n.edges.size(), TransferVector(m, 0));
  for (auto i : ix.topo) {
    const auto& e = n.edges[i];
    auto it = c.edges.find(e.id);
    if (it == c.edges.end()) throw DomainError("code has no coefficients for edge " + e.id);
    const auto& coeffs = it->second;
    const auto& ins = ix.edge_inputs[i];
    if (coeffs.size() != ins.size()) {
      throw DomainError("edge " + e.id + " needs " + std::to_string(ins.size()) +
                        " coefficients, got " + std::to_string(coeffs.size()));
    }
    TransferVector acc(m, ring.zero());
    for (std::size_t j = 0; j < ins.size(); ++j) {
      if (coeffs[j] >= ring.size()) throw DomainError("coefficient out of range on edge " + e.id);
      if (ins[j].message) {
        acc[ins[j].index] = ring.add(acc[ins[j].index], coeffs[j]);
      } else {
        const auto& v = out[ins[j].index];
        for (std::size_t t = 0; t < m; ++t) acc[t] = ring.add(acc[t], ring.mul(coeffs[j], v[t]));
      }
    }
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace detail

std::map<std::string, TransferVector> transfer(const Network& n, const ScalarLinearCode& c) {
  auto ix = detail::index_network(n);
  Ring ring(c.ring);
  auto vs = detail::edge_transfers(n, ix, ring, c);
  std::map<std::string, TransferVector> out;
  for (std::size_t i = 0; i < n.edges.size(); ++i) out[n.edges[i].id] = std::move(vs[i]);
  return out;
}

namespace {

// Gauss-Jordan on the system sum_i c_i rows_i = e_target.
std::optional<std::vector<Ring::Code>> solve_field(const std::vector<TransferVector>& rows,
                                                   std::size_t target, const Ring& f) {
  const std::size_t r = rows.size();
  const std::size_t m = rows.empty() ? 0 : rows.front().size();
  // augmented matrix: m equations, r unknowns
  std::vector<std::vector<Ring::Code>> a(m, std::vector<Ring::Code>(r + 1, f.zero()));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < r; ++i) a[j][i] = rows[i][j];
    a[j][r] = j == target ? f.one() : f.zero();
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == f.zero()) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    const auto inv = *f.inverse(a[row][col]);
    for (auto& v : a[row]) v = f.mul(v, inv);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == row || a[j][col] == f.zero()) continue;
      const auto factor = f.neg(a[j][col]);
      for (std::size_t t = 0; t <= r; ++t) a[j][t] = f.add(a[j][t], f.mul(factor, a[row][t]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t j = row; j < m; ++j) {
    if (a[j][r] != f.zero()) return std::nullopt;
  }
  std::vector<Ring::Code> c(r, f.zero());
  for (std::size_t k = 0; k < pivot_col.size(); ++k) c[pivot_col[k]] = a[k][r];
  return c;
}

}  // namespace

std::optional<std::vector<Ring::Code>> decode_search(const std::vector<TransferVector>& rows,
                                                     std::size_t target, const Ring& ring) {
  const std::size_t m = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != m) throw DomainError("decode_search: rows of different lengths");
  }
  if (!rows.empty() && target >= m) throw DomainError("decode_search: target out of range");
  if (rows.empty()) return std::nullopt;
  if (ring.is_field()) return solve_field(rows, target, ring);

  const std::size_t r = rows.size();
  const std::uint64_t q = ring.size();
  auto total = checked_pow(q, static_cast<unsigned>(r));
  if (!total || *total > (std::uint64_t{1} << 24)) {
    throw LimitError("decode_search: " + std::to_string(q) + "^" + std::to_string(r) +
                     " candidate decoders exceed 2^24");
  }
  std::vector<Ring::Code> c(r, 0);
  std::vector<Ring::Code> acc(m);
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = r; i-- > 0;) {
      c[i] = rest % q;
      rest /= q;
    }
    std::fill(acc.begin(), acc.end(), ring.zero());
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t t = 0; t < m; ++t) acc[t] = ring.add(acc[t], ring.mul(c[i], rows[i][t]));
    }
    bool ok = true;
    for (std::size_t t = 0; t < m && ok; ++t) ok = acc[t] == (t == target ? ring.one() : ring.zero());
    if (ok) return c;
  }
  return std::nullopt;
}

namespace {

std::vector<TransferVector> receiver_rows(const detail::NetworkIndex& ix, std::size_t r,
                                          const std::vector<TransferVector>& edges,
                                          std::size_t message_count, const Ring& ring) {
  std::vector<TransferVector> rows;
  for (const auto& in : ix.receiver_inputs[r]) {
    rows.push_back(detail::input_vector(in, edges, message_count, ring));
  }
  return rows;
}

}  // namespace

std::optional<std::string> verify_report(const Network& n, const ScalarLinearCode& c) {
  auto ix = detail::index_network(n);
  Ring ring(c.ring);
  auto edges = detail::edge_transfers(n, ix, ring, c);
  const std::size_t m = n.messages.size();
  for (std::size_t r = 0; r < n.receivers.size(); ++r) {
    const auto& rec = n.receivers[r];
    auto rows = receiver_rows(ix, r, edges, m, ring);
    for (std::size_t d = 0; d < rec.demands.size(); ++d) {
      auto it = c.decoders.find({rec.node, rec.demands[d]});
      if (it == c.decoders.end()) return "no decoder for " + rec.node + ":" + rec.demands[d];
      const auto& coeffs = it->second;
      if (coeffs.size() != rows.size()) {
        throw DomainError("decoder " + rec.node + ":" + rec.demands[d] + " needs " +
                          std::to_string(rows.size()) + " coefficients");
      }
      TransferVector acc(m, ring.zero());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (coeffs[i] >= ring.size()) throw DomainError("decoder coefficient out of range");
        for (std::size_t t = 0; t < m; ++t) acc[t] = ring.add(acc[t], ring.mul(coeffs[i], rows[i][t]));
      }
      const std::size_t target = ix.demands[r][d];
      for (std::size_t t = 0; t < m; ++t) {
        if (acc[t] != (t == target ? ring.one() : ring.zero())) {
          return "receiver " + rec.node + " does not recover " + rec.demands[d];
        }
      }
    }
  }
  return std::nullopt;
}

bool verify(const Network& n, const ScalarLinearCode& c) { return !verify_report(n, c); }

namespace {

std::string two_digits(unsigned i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02u", i);
  return buf;
}

}  // namespace

Network choose_two(unsigned n) {
  if (n < 2 || n > 12) throw LimitError("choose_two: n must be in [2, 12]");
  Network net;
  net.nodes.push_back("s");
  net.messages = {{"x", "s"}, {"y", "s"}};
  for (unsigned i = 1; i <= n; ++i) {
    net.nodes.push_back("v" + two_digits(i));
    net.edges.push_back({"l" + two_digits(i), "s", "v" + two_digits(i)});
  }
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      const std::string r = "r" + two_digits(i) + "_" + two_digits(j);
      net.nodes.push_back(r);
      net.edges.push_back({"l" + two_digits(i) + ">" + r, "v" + two_digits(i), r});
      net.edges.push_back({"l" + two_digits(j) + ">" + r, "v" + two_digits(j), r});
      net.receivers.push_back({r, {"x", "y"}});
    }
  }
  return net;
}

Network two_six() { return choose_two(4); }

ScalarLinearCode complete_decoders(const Network& n, ScalarLinearCode c) {
  auto ix = detail::index_network(n);
  Ring ring(c.ring);
  auto edges = detail::edge_transfers(n, ix, ring, c);
  c.decoders.clear();
  for (std::size_t r = 0; r < n.receivers.size(); ++r) {
    auto rows = receiver_rows(ix, r, edges, n.messages.size(), ring);
    for (std::size_t d = 0; d < n.receivers[r].demands.size(); ++d) {
      if (auto dec = decode_search(rows, ix.demands[r][d], ring)) {
        c.decoders[{n.receivers[r].node, n.receivers[r].demands[d]}] = *dec;
      }
    }
  }
  return c;
}

ScalarLinearCode choose_two_field_solution(unsigned n, const RingSpec& field) {
  auto fo = field_order(field);
  if (!fo) throw DomainError("choose_two_field_solution: " + to_string(field) + " is not a field");
  Ring f(field);
  if (n < 2 || f.size() + 1 < n) {
    throw DomainError("choose_two_field_solution: need a field with at least n - 1 elements");
  }
  Network net = choose_two(n);
  ScalarLinearCode c{field, {}, {}};
  for (const auto& e : net.edges) {
    if (e.tail != "s") c.edges[e.id] = {f.one()};
  }
  c.edges["l01"] = {f.zero(), f.one()};
  for (unsigned i = 2; i <= n; ++i) c.edges["l" + two_digits(i)] = {f.one(), Ring::Code{i - 2}};
  return complete_decoders(net, std::move(c));
}

ScalarLinearCode product_code(const Network& n, const std::vector<ScalarLinearCode>& solutions) {
  if (solutions.empty()) throw DomainError("product_code: no solutions");
  std::vector<RingSpec> specs;
  for (const auto& s : solutions) {
    if (auto bad = verify_report(n, s)) {
      throw DomainError("product_code: input over " + to_string(s.ring) + " fails: " + *bad);
    }
    specs.push_back(s.ring);
  }
  ScalarLinearCode out{RingSpec::product(specs), {}, {}};
  Ring prod(out.ring);
  auto combine = [&](auto getter) {
    std::vector<Ring::Code> parts(solutions.size());
    const std::size_t len = getter(solutions[0]).size();
    std::vector<Ring::Code> result(len);
    for (std::size_t t = 0; t < len; ++t) {
      for (std::size_t i = 0; i < solutions.size(); ++i) parts[i] = getter(solutions[i])[t];
      result[t] = prod.join(parts);
    }
    return result;
  };
  for (const auto& [id, coeffs] : solutions[0].edges) {
    out.edges[id] = combine([&](const ScalarLinearCode& s) -> const std::vector<Ring::Code>& {
      return s.edges.at(id);
    });
  }
  for (const auto& [key, coeffs] : solutions[0].decoders) {
    out.decoders[key] = combine([&](const ScalarLinearCode& s) -> const std::vector<Ring::Code>& {
      return s.decoders.at(key);
    });
  }
  if (auto bad = verify_report(n, out)) throw Error("product_code produced a non-solution: " + *bad);
  return out;
}

namespace {

ScalarLinearCode map_through(const ScalarLinearCode& c, const RingHom& h) {
  ScalarLinearCode out{h.target().spec(), {}, {}};
  for (const auto& [id, coeffs] : c.edges) {
    auto& dst = out.edges[id];
    for (auto v : coeffs) dst.push_back(h.apply(v));
  }
  for (const auto& [key, coeffs] : c.decoders) {
    auto& dst = out.decoders[key];
    for (auto v : coeffs) dst.push_back(h.apply(v));
  }
  return out;
}

}  // namespace

ScalarLinearCode map_code(const Network& n, const ScalarLinearCode& c, const RingHom& h) {
  if (!h.surjective_kind()) throw DomainError("map_code: " + to_string(h.kind()) + " is not surjective");
  if (!(h.source().spec() == c.ring)) {
    throw DomainError("map_code: code is over " + to_string(c.ring) + ", hom starts at " +
                      to_string(h.source().spec()));
  }
  if (auto bad = verify_report(n, c)) throw DomainError("map_code: input is not a solution: " + *bad);
  auto out = map_through(c, h);
  if (auto bad = verify_report(n, out)) throw Error("map_code produced a non-solution: " + *bad);
  return out;
}

ScalarLinearCode lift_subring(const Network& n, const ScalarLinearCode& c, const RingSpec& r) {
  if (auto bad = verify_report(n, c)) throw DomainError("lift_subring: input is not a solution: " + *bad);
  if (c.ring == r) return c;
  if (structural_defect(HomKind::SubringInclusion, c.ring, r)) {
    throw DomainError("lift_subring: " + to_string(c.ring) + " is not a supported subring of " +
                      to_string(r));
  }
  auto out = map_through(c, RingHom::subring_inclusion(c.ring, r));
  if (auto bad = verify_report(n, out)) throw Error("lift_subring produced a non-solution: " + *bad);
  return out;
}

namespace {

void leaves(const Ring& r, Ring::Code code, std::vector<Ring::Code>& out) {
  if (r.factors().empty()) {
    out.push_back(code);
    return;
  }
  auto parts = r.split(code);
  for (std::size_t i = 0; i < parts.size(); ++i) leaves(r.factors()[i], parts[i], out);
}

void leaf_specs(const RingSpec& r, std::vector<RingSpec>& out) {
  if (r.is<Product>()) {
    for (const auto& f : r.as<Product>().factors) leaf_specs(f, out);
  } else {
    out.push_back(canonicalize(r));
  }
}

// Re-encodes a code over the canonical form of its ring by permuting factors.
ScalarLinearCode to_canonical(const ScalarLinearCode& c) {
  const RingSpec target = canonicalize(c.ring);
  if (target == c.ring) return c;
  std::vector<RingSpec> from, to;
  leaf_specs(c.ring, from);
  leaf_specs(target, to);
  std::vector<std::size_t> source_of;
  std::vector<bool> used(from.size(), false);
  for (const auto& t : to) {
    std::size_t i = 0;
    while (i < from.size() && (used[i] || !(from[i] == t))) ++i;
    if (i == from.size()) throw Error("transport: cannot match the factors of " + to_string(c.ring));
    used[i] = true;
    source_of.push_back(i);
  }
  const Ring src(c.ring), dst(target);
  auto recode = [&](Ring::Code v) {
    std::vector<Ring::Code> parts;
    leaves(src, v, parts);
    if (dst.factors().empty()) return parts[source_of[0]];
    std::vector<Ring::Code> permuted;
    for (auto i : source_of) permuted.push_back(parts[i]);
    return dst.join(permuted);
  };
  ScalarLinearCode out{target, {}, {}};
  for (const auto& [id, coeffs] : c.edges) {
    for (auto v : coeffs) out.edges[id].push_back(recode(v));
  }
  for (const auto& [key, coeffs] : c.decoders) {
    for (auto v : coeffs) out.decoders[key].push_back(recode(v));
  }
  return out;
}

}  // namespace

ScalarLinearCode transport(const Network& n, const ScalarLinearCode& c,
                           const DominanceVerdict& verdict) {
  if (verdict.relation != Relation::Dominates) throw DomainError("transport: not a Dominates verdict");
  if (!(canonicalize(c.ring) == verdict.lhs)) {
    throw DomainError("transport: code is over " + to_string(c.ring) + ", certificate starts at " +
                      to_string(verdict.lhs));
  }
  const ScalarLinearCode start = to_canonical(c);
  std::vector<ScalarLinearCode> parts;
  for (const auto& chain : verdict.certificate) {
    ScalarLinearCode cur = start;
    for (const auto& st : chain) {
      if (st.kind == HomKind::Identity) continue;
      if (st.kind == HomKind::SubringInclusion) {
        cur = lift_subring(n, cur, st.to);
      } else {
        cur = map_code(n, cur, RingHom::make(st.kind, st.from, st.to, st.index));
      }
    }
    parts.push_back(std::move(cur));
  }
  if (parts.size() == 1 && parts.front().ring == verdict.rhs) return parts.front();

  // one solution per atomic factor; regroup Z(n) factors by CRT
  ScalarLinearCode combined = product_code(n, parts);
  std::vector<RingSpec> factors =
      verdict.rhs.is<Product>() ? verdict.rhs.as<Product>().factors : std::vector<RingSpec>{verdict.rhs};
  std::vector<RingSpec> atoms;
  for (const auto& p : parts) atoms.push_back(p.ring);
  Ring from(combined.ring);
  Ring to(verdict.rhs);
  std::vector<std::pair<std::size_t, std::optional<RingHom>>> groups;  // atom count, CRT map
  std::size_t pos = 0;
  for (const auto& f : factors) {
    std::size_t count = 1;
    if (f.is<IntegersMod>()) count = factorize(f.as<IntegersMod>().n).size();
    if (pos + count > atoms.size()) throw Error("transport: certificate does not cover the target");
    if (count == 1) {
      if (!(atoms[pos] == f)) throw Error("transport: certificate ends at the wrong factor");
      groups.emplace_back(1, std::nullopt);
    } else {
      std::vector<RingSpec> group(atoms.begin() + static_cast<std::ptrdiff_t>(pos),
                                  atoms.begin() + static_cast<std::ptrdiff_t>(pos + count));
      groups.emplace_back(count, RingHom::make(HomKind::CrtIsomorphism, RingSpec::product(group), f));
    }
    pos += count;
  }
  if (pos != atoms.size()) throw Error("transport: certificate does not match the target");
  auto regroup = [&](Ring::Code code) {
    auto pieces = from.split(code);
    std::vector<Ring::Code> out;
    std::size_t at = 0;
    for (const auto& [count, crt] : groups) {
      if (!crt) {
        out.push_back(pieces[at]);
      } else {
        std::vector<Ring::Code> sub(pieces.begin() + static_cast<std::ptrdiff_t>(at),
                                    pieces.begin() + static_cast<std::ptrdiff_t>(at + count));
        out.push_back(crt->apply(crt->source().join(sub)));
      }
      at += count;
    }
    return to.join(out);
  };
  ScalarLinearCode out{verdict.rhs, {}, {}};
  for (const auto& [id, coeffs] : combined.edges) {
    for (auto v : coeffs) out.edges[id].push_back(regroup(v));
  }
  for (const auto& [key, coeffs] : combined.decoders) {
    for (auto v : coeffs) out.decoders[key].push_back(regroup(v));
  }
  if (auto bad = verify_report(n, out)) throw Error("transport produced a non-solution: " + *bad);
  return out;
}

}  // namespace ringnc
