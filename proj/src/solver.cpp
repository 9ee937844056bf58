#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "network_index.hpp"
#include "ringnc/arith.hpp"
#include "ringnc/error.hpp"
#include "ringnc/network.hpp"

namespace ringnc {

namespace {

enum class Mode { Free, One, Zero };

struct Plan {
  detail::NetworkIndex ix;
  std::vector<Mode> mode;                       // per edge
  std::vector<std::vector<std::size_t>> checks;  // receivers to test after topo position i
  std::vector<std::size_t> initial_checks;       // receivers fed by messages only
  std::size_t free_count = 0;
};

Plan make_plan(const Network& n) {
  Plan plan;
  plan.ix = detail::index_network(n);
  const auto& ix = plan.ix;

  // nodes that can reach a receiver, by backward search
  std::set<std::string> live;
  std::vector<std::string> stack;
  for (const auto& r : n.receivers) {
    if (live.insert(r.node).second) stack.push_back(r.node);
  }
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& e : n.edges) {
      if (e.head == v && live.insert(e.tail).second) stack.push_back(e.tail);
    }
  }

  plan.mode.resize(n.edges.size());
  for (std::size_t i = 0; i < n.edges.size(); ++i) {
    const auto arity = ix.edge_inputs[i].size();
    if (!live.count(n.edges[i].head) || arity == 0) {
      plan.mode[i] = Mode::Zero;
    } else if (arity == 1) {
      plan.mode[i] = Mode::One;
    } else {
      plan.mode[i] = Mode::Free;
      plan.free_count += arity;
    }
  }

  std::vector<std::size_t> topo_pos(n.edges.size());
  for (std::size_t k = 0; k < ix.topo.size(); ++k) topo_pos[ix.topo[k]] = k;
  plan.checks.resize(ix.topo.size());
  for (std::size_t r = 0; r < n.receivers.size(); ++r) {
    std::optional<std::size_t> last;
    for (const auto& in : ix.receiver_inputs[r]) {
      if (!in.message) last = std::max(last.value_or(0), topo_pos[in.index]);
    }
    if (last) {
      plan.checks[*last].push_back(r);
    } else {
      plan.initial_checks.push_back(r);
    }
  }
  return plan;
}

struct State {
  std::vector<std::vector<Ring::Code>> coeffs;  // per edge
  std::vector<TransferVector> transfers;        // per edge
};

class Search {
 public:
  Search(const Network& n, const Plan& plan, const Ring& ring)
      : n_(n), plan_(plan), ring_(ring), m_(n.messages.size()) {}

  bool receivers_ok(const State& s, const std::vector<std::size_t>& rs) const {
    for (auto r : rs) {
      std::vector<TransferVector> rows;
      for (const auto& in : plan_.ix.receiver_inputs[r]) {
        rows.push_back(detail::input_vector(in, s.transfers, m_, ring_));
      }
      for (auto target : plan_.ix.demands[r]) {
        if (!decode_search(rows, target, ring_)) return false;
      }
    }
    return true;
  }

  // Sets the coefficients of the edge at topo position `pos` and updates its
  // transfer vector; `value` packs free coefficients, first one most significant.
  void assign(State& s, std::size_t pos, std::uint64_t value) const {
    const auto e = plan_.ix.topo[pos];
    const auto& ins = plan_.ix.edge_inputs[e];
    auto& c = s.coeffs[e];
    c.assign(ins.size(), ring_.zero());
    switch (plan_.mode[e]) {
      case Mode::Zero:
        break;
      case Mode::One:
        c[0] = ring_.one();
        break;
      case Mode::Free:
        for (std::size_t j = ins.size(); j-- > 0;) {
          c[j] = value % ring_.size();
          value /= ring_.size();
        }
        break;
    }
    auto& t = s.transfers[e];
    t.assign(m_, ring_.zero());
    for (std::size_t j = 0; j < ins.size(); ++j) {
      if (c[j] == ring_.zero()) continue;
      if (ins[j].message) {
        t[ins[j].index] = ring_.add(t[ins[j].index], c[j]);
      } else {
        const auto& v = s.transfers[ins[j].index];
        for (std::size_t k = 0; k < m_; ++k) t[k] = ring_.add(t[k], ring_.mul(c[j], v[k]));
      }
    }
  }

  std::uint64_t choices(std::size_t pos) const {
    const auto e = plan_.ix.topo[pos];
    if (plan_.mode[e] != Mode::Free) return 1;
    return *checked_pow(ring_.size(), static_cast<unsigned>(plan_.ix.edge_inputs[e].size()));
  }

  bool is_free(std::size_t pos) const { return plan_.mode[plan_.ix.topo[pos]] == Mode::Free; }

  // Fills positions [pos, end) without branching; false if a check fails.
  bool fixed_run(State& s, std::size_t pos, std::size_t end) const {
    for (; pos < end; ++pos) {
      assign(s, pos, 0);
      if (!receivers_ok(s, plan_.checks[pos])) return false;
    }
    return true;
  }

  template <class Stop>
  bool dfs(State& s, std::size_t pos, const Stop& stop) const {
    const auto len = plan_.ix.topo.size();
    while (pos < len && !is_free(pos)) {
      assign(s, pos, 0);
      if (!receivers_ok(s, plan_.checks[pos])) return false;
      ++pos;
    }
    if (pos == len) return true;
    const auto count = choices(pos);
    for (std::uint64_t v = 0; v < count; ++v) {
      if (stop()) return false;
      assign(s, pos, v);
      if (receivers_ok(s, plan_.checks[pos]) && dfs(s, pos + 1, stop)) return true;
    }
    return false;
  }

 private:
  const Network& n_;
  const Plan& plan_;
  const Ring& ring_;
  std::size_t m_;
};

}  // namespace

std::size_t free_coefficient_count(const Network& n) { return make_plan(n).free_count; }

std::optional<ScalarLinearCode> solve_brute(const Network& n, const RingSpec& spec,
                                            const SolveOptions& options) {
  const Plan plan = make_plan(n);
  const Ring ring(spec);
  auto space = checked_pow(ring.size(), static_cast<unsigned>(plan.free_count));
  if (!space || *space > options.budget) {
    throw LimitError("search space " + std::to_string(ring.size()) + "^" +
                     std::to_string(plan.free_count) + " exceeds the budget of " +
                     std::to_string(options.budget) + " assignments");
  }
  const Search search(n, plan, ring);
  State root;
  root.coeffs.resize(n.edges.size());
  root.transfers.assign(n.edges.size(), TransferVector(n.messages.size(), ring.zero()));
  if (!search.receivers_ok(root, plan.initial_checks)) return std::nullopt;

  const auto len = plan.ix.topo.size();
  std::size_t first_free = 0;
  while (first_free < len && !search.is_free(first_free)) ++first_free;
  if (!search.fixed_run(root, 0, first_free)) return std::nullopt;

  std::optional<State> found;
  if (first_free == len) {
    found = root;
  } else {
    // workers take values of the first free edge in order; the smallest hit wins
    const std::uint64_t count = search.choices(first_free);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::mutex mu;
    std::exception_ptr failure;
    auto worker = [&] {
      try {
        for (;;) {
          const auto v = next.fetch_add(1);
          if (v >= count || v >= best.load()) return;
          State s = root;
          search.assign(s, first_free, v);
          auto stop = [&] { return best.load() < v; };
          if (!search.receivers_ok(s, plan.checks[first_free])) continue;
          if (!search.dfs(s, first_free + 1, stop)) continue;
          std::lock_guard lock(mu);
          if (v < best.load()) {
            best = v;
            found = std::move(s);
          }
          return;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        best = 0;
      }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
  }
  if (!found) return std::nullopt;

  ScalarLinearCode code{spec, {}, {}};
  for (std::size_t i = 0; i < n.edges.size(); ++i) code.edges[n.edges[i].id] = found->coeffs[i];
  code = complete_decoders(n, std::move(code));
  if (auto bad = verify_report(n, code)) throw Error("solver produced a non-solution: " + *bad);
  return code;
}

}  // namespace ringnc
