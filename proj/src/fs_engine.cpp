#include "fas/fs_engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fas/errors.hpp"

namespace fas {

FasInstance::FasInstance(SimpleGraph locations, SimpleGraph people)
    : locations_(std::move(locations)), people_(std::move(people)) {
  if (locations_.order() != people_.order()) {
    throw InputError("location graph has order " +
                     std::to_string(locations_.order()) +
                     " but people graph has order " +
                     std::to_string(people_.order()));
  }
}

Configuration::Configuration(std::vector<VertexId> assignment)
    : assignment_(std::move(assignment)) {
  std::vector<bool> seen(assignment_.size(), false);
  for (VertexId p : assignment_) {
    if (p >= assignment_.size() || seen[p]) {
      throw InputError("configuration is not a permutation of [0, " +
                       std::to_string(assignment_.size()) + ")");
    }
    seen[p] = true;
  }
}

Configuration Configuration::identity(std::size_t n) {
  std::vector<VertexId> a(n);
  std::iota(a.begin(), a.end(), VertexId{0});
  return Configuration(std::move(a));
}

std::vector<VertexId> Configuration::location_of_people() const {
  std::vector<VertexId> inv(assignment_.size());
  for (VertexId loc = 0; loc < assignment_.size(); ++loc) {
    inv[assignment_[loc]] = loc;
  }
  return inv;
}

ColorClassing::ColorClassing(std::vector<std::uint32_t> class_of,
                             std::uint32_t class_count)
    : class_of_(std::move(class_of)), class_count_(class_count) {
  for (std::uint32_t c : class_of_) {
    if (c >= class_count_) {
      throw InputError("class id " + std::to_string(c) +
                       " out of range (class count " +
                       std::to_string(class_count_) + ")");
    }
  }
}

ColorClassing ColorClassing::discrete(std::size_t n) {
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  return ColorClassing(std::move(ids), static_cast<std::uint32_t>(n));
}

ColorClassing ColorClassing::with_singleton(VertexId person) const {
  if (person >= class_of_.size()) {
    throw InputError("person " + std::to_string(person) + " out of range");
  }
  auto ids = class_of_;
  ids[person] = class_count_;
  return ColorClassing(std::move(ids), class_count_ + 1);
}

std::vector<std::uint32_t> ColorClassing::pattern(const Configuration& c) const {
  if (c.size() != class_of_.size()) {
    throw InputError("configuration size " + std::to_string(c.size()) +
                     " does not match classing size " +
                     std::to_string(class_of_.size()));
  }
  std::vector<std::uint32_t> out(c.size());
  for (VertexId loc = 0; loc < c.size(); ++loc) {
    out[loc] = class_of_[c.person_at(loc)];
  }
  return out;
}

bool verify_color_classing(const FasInstance& inst, const ColorClassing& cc) {
  const SimpleGraph& y = inst.people();
  if (cc.size() != y.order()) return false;
  std::vector<std::vector<VertexId>> members(cc.class_count());
  for (VertexId p = 0; p < y.order(); ++p) members[cc.class_of(p)].push_back(p);
  for (const auto& cls : members) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const VertexId a = cls[i];
        const VertexId b = cls[j];
        if (!y.adjacent(a, b)) return false;
        for (VertexId z = 0; z < y.order(); ++z) {
          if (z == a || z == b) continue;
          if (y.adjacent(a, z) != y.adjacent(b, z)) return false;
        }
      }
    }
  }
  return true;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Reachable:
      return "REACHABLE";
    case SearchStatus::Unreachable:
      return "UNREACHABLE";
    case SearchStatus::Limit:
      return "LIMIT";
  }
  return "?";
}

namespace {

void check_size(const FasInstance& inst, const Configuration& c) {
  if (c.size() != inst.order()) {
    throw InputError("configuration has size " + std::to_string(c.size()) +
                     " but instance has order " +
                     std::to_string(inst.order()));
  }
}

}  // namespace

bool is_legal_swap(const FasInstance& inst, const Configuration& c,
                   SwapMove m) {
  check_size(inst, c);
  return m.loc_a != m.loc_b && inst.locations().adjacent(m.loc_a, m.loc_b) &&
         inst.people().adjacent(c.person_at(m.loc_a), c.person_at(m.loc_b));
}

std::vector<SwapMove> legal_swaps(const FasInstance& inst,
                                  const Configuration& c) {
  check_size(inst, c);
  std::vector<SwapMove> out;
  for (const Edge& e : inst.locations().edges()) {
    if (inst.people().adjacent(c.person_at(e.first), c.person_at(e.second))) {
      out.push_back({e.first, e.second});
    }
  }
  return out;
}

Configuration apply_swap(const Configuration& c, SwapMove m) {
  Configuration next = c;
  next.swap_locations(m.loc_a, m.loc_b);
  return next;
}

Configuration apply_swap_checked(const FasInstance& inst,
                                 const Configuration& c, SwapMove m) {
  if (!is_legal_swap(inst, c, m)) {
    throw MoveError("illegal swap (" + std::to_string(m.loc_a) + "," +
                    std::to_string(m.loc_b) + ")");
  }
  return apply_swap(c, m);
}

Configuration replay(const FasInstance& inst, const Configuration& from,
                     std::span<const SwapMove> moves) {
  Configuration c = from;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (!is_legal_swap(inst, c, moves[i])) {
      throw MoveError("witness step " + std::to_string(i) + ": illegal swap (" +
                      std::to_string(moves[i].loc_a) + "," +
                      std::to_string(moves[i].loc_b) + ")");
    }
    c.swap_locations(moves[i].loc_a, moves[i].loc_b);
  }
  return c;
}

namespace {

/// Symbol-level view of the search: which symbol sits on each location and
/// which pairs of symbols may trade places.
struct Space {
  ColorClassing classing;
  std::uint32_t symbol_count = 0;
  std::vector<std::uint8_t> friends;
  std::vector<SwapMove> moves;
  SymbolCodec codec;

  bool can_swap(std::uint32_t a, std::uint32_t b) const {
    return friends[std::size_t{a} * symbol_count + b] != 0;
  }
};

Space make_space(const FasInstance& inst, const SearchOptions& opts) {
  Space s;
  const std::size_t n = inst.order();
  if (opts.quotient) {
    if (opts.quotient->size() != n) {
      throw InputError("classing covers " +
                       std::to_string(opts.quotient->size()) +
                       " people, instance has " + std::to_string(n));
    }
    if (!verify_color_classing(inst, *opts.quotient)) {
      throw InputError(
          "classing is not valid for quotient search: some class is not a "
          "clique with identical outside friendships");
    }
    s.classing = *opts.quotient;
  } else {
    s.classing = ColorClassing::discrete(n);
  }
  s.symbol_count = std::max<std::uint32_t>(1, s.classing.class_count());
  const std::uint32_t k = s.symbol_count;
  s.friends.assign(std::size_t{k} * k, 0);
  std::vector<std::optional<VertexId>> rep(k);
  for (VertexId p = 0; p < n; ++p) {
    auto& r = rep[s.classing.class_of(p)];
    if (!r) r = p;
  }
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      if (a != b && rep[a] && rep[b] &&
          inst.people().adjacent(*rep[a], *rep[b])) {
        s.friends[std::size_t{a} * k + b] = 1;
      }
    }
  }
  if (opts.movable && opts.movable->size() != n) {
    throw InputError("movable mask has wrong size");
  }
  for (const Edge& e : inst.locations().edges()) {
    if (opts.movable &&
        !((*opts.movable)[e.first] && (*opts.movable)[e.second])) {
      continue;
    }
    s.moves.push_back({e.first, e.second});
  }
  s.codec = SymbolCodec(n, k);
  return s;
}

std::vector<std::uint64_t> encode(const Space& s, const Configuration& c) {
  return s.codec.pack(s.classing.pattern(c));
}

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> budget) {
    if (budget) until_ = std::chrono::steady_clock::now() + *budget;
  }
  bool expired() {
    if (!until_) return false;
    if (++ticks_ % 1024 != 0) return false;
    return std::chrono::steady_clock::now() >= *until_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> until_;
  std::uint64_t ticks_ = 0;
};

/// One BFS tree: dedup store in discovery order plus parent links.
struct Tree {
  explicit Tree(std::size_t words) : store(words), scratch(words) {}

  PackedStateStore store;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;
  std::vector<std::uint64_t> scratch;
  std::size_t level_begin = 0;
  std::size_t level_end = 0;

  std::uint32_t add_root(const std::uint64_t* state) {
    auto [idx, _] = store.insert(state);
    parent.push_back(PackedStateStore::kNone);
    via.push_back(PackedStateStore::kNone);
    level_end = store.size();
    return idx;
  }

  std::vector<SwapMove> path_to(const Space& s, std::uint32_t idx) const {
    std::vector<SwapMove> out;
    while (parent[idx] != PackedStateStore::kNone) {
      out.push_back(s.moves[via[idx]]);
      idx = parent[idx];
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Calls on_new(idx) for every newly stored successor of `from`. Stops early
  /// and returns false when on_new returns false.
  template <class OnNew>
  bool expand(const Space& s, std::uint32_t from, OnNew&& on_new) {
    const std::size_t words = store.words_per_state();
    for (std::uint32_t mi = 0; mi < s.moves.size(); ++mi) {
      const SwapMove m = s.moves[mi];
      const std::uint64_t* cur = store.state(from);
      const std::uint32_t a = s.codec.get(cur, m.loc_a);
      const std::uint32_t b = s.codec.get(cur, m.loc_b);
      if (a == b || !s.can_swap(a, b)) continue;
      std::copy(cur, cur + words, scratch.begin());
      s.codec.set(scratch.data(), m.loc_a, b);
      s.codec.set(scratch.data(), m.loc_b, a);
      auto [idx, inserted] = store.insert(scratch.data());
      if (!inserted) continue;
      parent.push_back(from);
      via.push_back(mi);
      if (!on_new(idx)) return false;
    }
    return true;
  }
};

template <class Goal>
ReachabilityResult bfs_to_goal(const Space& s, const std::uint64_t* start,
                               Goal&& goal, const SearchOptions& opts) {
  ReachabilityResult r;
  Tree t(s.codec.words());
  t.add_root(start);
  r.frontier_peak = 1;
  if (goal(start)) {
    r.status = SearchStatus::Reachable;
    r.witness.emplace();
    r.states_explored = 1;
    return r;
  }
  Deadline deadline(opts.time_budget);
  std::optional<std::uint32_t> hit;
  bool limited = false;
  while (t.level_begin < t.level_end && !hit && !limited) {
    for (std::size_t i = t.level_begin; i < t.level_end; ++i) {
      if (deadline.expired()) {
        limited = true;
        break;
      }
      const bool go_on = t.expand(s, static_cast<std::uint32_t>(i),
                                  [&](std::uint32_t idx) {
                                    if (goal(t.store.state(idx))) {
                                      hit = idx;
                                      return false;
                                    }
                                    if (t.store.size() > opts.max_states) {
                                      limited = true;
                                      return false;
                                    }
                                    return true;
                                  });
      if (!go_on) break;
    }
    t.level_begin = t.level_end;
    t.level_end = t.store.size();
    r.frontier_peak =
        std::max<std::uint64_t>(r.frontier_peak, t.level_end - t.level_begin);
  }
  r.states_explored = t.store.size();
  if (hit) {
    r.status = SearchStatus::Reachable;
    r.witness = t.path_to(s, *hit);
  } else if (limited) {
    r.status = SearchStatus::Limit;
  } else {
    r.status = SearchStatus::Unreachable;
  }
  return r;
}

ReachabilityResult bidirectional_bfs(const Space& s,
                                     const std::uint64_t* start,
                                     const std::uint64_t* target,
                                     const SearchOptions& opts) {
  ReachabilityResult r;
  const std::size_t words = s.codec.words();
  if (std::equal(start, start + words, target)) {
    r.status = SearchStatus::Reachable;
    r.witness.emplace();
    r.states_explored = 1;
    r.frontier_peak = 1;
    return r;
  }
  Tree fwd(words);
  Tree bwd(words);
  fwd.add_root(start);
  bwd.add_root(target);
  r.frontier_peak = 1;
  Deadline deadline(opts.time_budget);
  bool limited = false;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;  // (fwd, bwd)

  while (!meet && !limited) {
    const std::size_t fwd_width = fwd.level_end - fwd.level_begin;
    const std::size_t bwd_width = bwd.level_end - bwd.level_begin;
    if (fwd_width == 0 || bwd_width == 0) break;
    const bool forward = fwd_width <= bwd_width;
    Tree& side = forward ? fwd : bwd;
    const Tree& other = forward ? bwd : fwd;
    for (std::size_t i = side.level_begin; i < side.level_end; ++i) {
      if (deadline.expired()) {
        limited = true;
        break;
      }
      const bool go_on = side.expand(
          s, static_cast<std::uint32_t>(i), [&](std::uint32_t idx) {
            if (auto j = other.store.find(side.store.state(idx))) {
              meet = forward ? std::pair{idx, *j} : std::pair{*j, idx};
              return false;
            }
            if (fwd.store.size() + bwd.store.size() > opts.max_states) {
              limited = true;
              return false;
            }
            return true;
          });
      if (!go_on) break;
    }
    side.level_begin = side.level_end;
    side.level_end = side.store.size();
    r.frontier_peak = std::max<std::uint64_t>(
        r.frontier_peak, side.level_end - side.level_begin);
  }
  r.states_explored = fwd.store.size() + bwd.store.size();
  if (meet) {
    auto path = fwd.path_to(s, meet->first);
    auto back = bwd.path_to(s, meet->second);
    path.insert(path.end(), back.rbegin(), back.rend());
    r.status = SearchStatus::Reachable;
    r.witness = std::move(path);
  } else if (limited) {
    r.status = SearchStatus::Limit;
  } else {
    r.status = SearchStatus::Unreachable;
  }
  return r;
}

}  // namespace

ReachabilityResult solve_c2c(const FasInstance& inst, const Configuration& from,
                             const Configuration& to,
                             const SearchOptions& opts) {
  check_size(inst, from);
  check_size(inst, to);
  const Space s = make_space(inst, opts);
  const auto start = encode(s, from);
  const auto target = encode(s, to);
  if (opts.bidirectional) {
    return bidirectional_bfs(s, start.data(), target.data(), opts);
  }
  const std::size_t words = s.codec.words();
  return bfs_to_goal(
      s, start.data(),
      [&](const std::uint64_t* st) {
        return std::equal(st, st + words, target.data());
      },
      opts);
}

ReachabilityResult solve_person_to_location(const FasInstance& inst,
                                            const Configuration& from,
                                            VertexId person, VertexId target,
                                            const SearchOptions& opts) {
  check_size(inst, from);
  if (person >= inst.order() || target >= inst.order()) {
    throw InputError("person or target location out of range");
  }
  SearchOptions o = opts;
  if (o.quotient) o.quotient = o.quotient->with_singleton(person);
  const Space s = make_space(inst, o);
  const auto start = encode(s, from);
  const std::uint32_t symbol = s.classing.class_of(person);
  return bfs_to_goal(
      s, start.data(),
      [&](const std::uint64_t* st) { return s.codec.get(st, target) == symbol; },
      o);
}

Exploration explore(const FasInstance& inst, const Configuration& from,
                    const SearchOptions& opts) {
  check_size(inst, from);
  Space s = make_space(inst, opts);
  const auto start = encode(s, from);
  Tree t(s.codec.words());
  t.add_root(start.data());
  Deadline deadline(opts.time_budget);
  Exploration ex;
  ex.frontier_peak_ = 1;
  bool limited = false;
  std::uint32_t depth = 0;
  while (t.level_begin < t.level_end && !limited) {
    for (std::size_t i = t.level_begin; i < t.level_end; ++i) {
      if (deadline.expired()) {
        limited = true;
        break;
      }
      const bool go_on =
          t.expand(s, static_cast<std::uint32_t>(i), [&](std::uint32_t) {
            if (t.store.size() > opts.max_states) {
              limited = true;
              return false;
            }
            return true;
          });
      if (!go_on) break;
    }
    t.level_begin = t.level_end;
    t.level_end = t.store.size();
    if (t.level_end > t.level_begin) ++depth;
    ex.frontier_peak_ =
        std::max<std::uint64_t>(ex.frontier_peak_, t.level_end - t.level_begin);
  }
  ex.complete_ = !limited;
  ex.depth_ = depth;
  ex.classing_ = std::move(s.classing);
  ex.codec_ = s.codec;
  ex.friends_ = std::move(s.friends);
  ex.symbol_count_ = s.symbol_count;
  ex.moves_ = std::move(s.moves);
  ex.store_ = std::make_unique<PackedStateStore>(std::move(t.store));
  ex.parent_ = std::move(t.parent);
  ex.via_ = std::move(t.via);
  return ex;
}

std::vector<std::uint32_t> Exploration::pattern(std::size_t i) const {
  return codec_.unpack(store_->state(static_cast<std::uint32_t>(i)));
}

std::optional<std::size_t> Exploration::find_pattern(
    std::span<const std::uint32_t> pattern) const {
  if (pattern.size() != codec_.length()) return std::nullopt;
  for (std::uint32_t sym : pattern) {
    if (sym >= symbol_count_) return std::nullopt;
  }
  const auto packed = codec_.pack(pattern);
  if (auto idx = store_->find(packed.data())) return *idx;
  return std::nullopt;
}

bool Exploration::contains(const Configuration& c) const {
  return find_pattern(classing_.pattern(c)).has_value();
}

void Exploration::for_each(
    const std::function<void(std::size_t, std::span<const std::uint32_t>)>& fn)
    const {
  std::vector<std::uint32_t> buf(codec_.length());
  for (std::size_t i = 0; i < store_->size(); ++i) {
    codec_.unpack(store_->state(static_cast<std::uint32_t>(i)), buf.data());
    fn(i, buf);
  }
}

std::vector<SwapMove> Exploration::path_to(std::size_t i) const {
  std::vector<SwapMove> out;
  auto idx = static_cast<std::uint32_t>(i);
  while (parent_[idx] != PackedStateStore::kNone) {
    out.push_back(moves_[via_[idx]]);
    idx = parent_[idx];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Exploration::successors(std::size_t i) const {
  std::vector<std::size_t> out;
  const std::uint64_t* cur = store_->state(static_cast<std::uint32_t>(i));
  std::vector<std::uint64_t> scratch(codec_.words());
  for (const SwapMove& m : moves_) {
    const std::uint32_t a = codec_.get(cur, m.loc_a);
    const std::uint32_t b = codec_.get(cur, m.loc_b);
    if (a == b || !friends_[std::size_t{a} * symbol_count_ + b]) continue;
    std::copy(cur, cur + codec_.words(), scratch.begin());
    codec_.set(scratch.data(), m.loc_a, b);
    codec_.set(scratch.data(), m.loc_b, a);
    if (auto idx = store_->find(scratch.data())) out.push_back(*idx);
  }
  return out;
}

ComponentReport enumerate_component(const FasInstance& inst,
                                    const Configuration& from,
                                    const SearchOptions& opts,
                                    std::uint64_t cap) {
  if (cap < 1) throw InputError("component cap must be at least 1");
  SearchOptions o = opts;
  o.max_states = cap;
  const Exploration ex = explore(inst, from, o);
  ComponentReport rep;
  rep.size = ex.size();
  rep.frontier_peak = ex.frontier_peak();
  rep.depth = ex.depth();
  rep.status = ex.complete() && ex.size() < cap ? SearchStatus::Reachable
                                                : SearchStatus::Limit;
  return rep;
}

}  // namespace fas
