#include "edgeest/enumeration.hpp"

#include <algorithm>
#include <cassert>

namespace edgeest {

namespace {

std::vector<Vertex> normalized(std::vector<Vertex> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

// Merge two disjoint sorted vectors into `out`.
void merge_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                 std::vector<Vertex>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

}  // namespace

std::optional<Edge> extract_edge_sorted(OracleSession& s, std::span<const Vertex> a) {
  const std::size_t n = a.size();
  if (n < 2) return std::nullopt;
  if (s.is_query(a)) return std::nullopt;

  // Shortest non-independent prefix: good/bad bracket, exponential then binary.
  std::size_t good = 1, bad = n;
  for (std::size_t g = 2; g < bad; g *= 2) {
    if (s.is_query(a.first(g))) {
      good = g;
    } else {
      bad = g;
      break;
    }
  }
  while (bad - good > 1) {
    std::size_t mid = good + (bad - good) / 2;
    if (s.is_query(a.first(mid))) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  const Vertex u = a[bad - 1];

  // First neighbor of u inside the (independent) prefix before it.
  std::vector<Vertex> buf;
  auto prefix_with_u = [&](std::size_t r) {
    buf.assign(a.begin(), a.begin() + r);
    buf.push_back(u);
    return s.is_query(buf);
  };
  std::size_t ngood = 0, nbad = bad - 1;  // prefix(bad-1) + u is the full bad prefix
  for (std::size_t g = 1; g < nbad; g *= 2) {
    if (prefix_with_u(g)) {
      ngood = g;
    } else {
      nbad = g;
      break;
    }
  }
  while (nbad - ngood > 1) {
    std::size_t mid = ngood + (nbad - ngood) / 2;
    if (prefix_with_u(mid)) {
      ngood = mid;
    } else {
      nbad = mid;
    }
  }
  return make_edge(a[nbad - 1], u);
}

std::optional<Edge> extract_edge(OracleSession& s, std::vector<Vertex> a) {
  auto sorted = normalized(std::move(a));
  return extract_edge_sorted(s, sorted);
}

BipartiteCross::BipartiteCross(std::vector<Vertex> a, std::vector<Vertex> b)
    : a0_(std::move(a)), b0_(std::move(b)) {}

std::optional<Edge> BipartiteCross::next(OracleSession& s) {
  if (!started_) {
    started_ = true;
    merge_union(a0_, b0_, ubuf_);
    if (!s.is_query(ubuf_)) {
      stack_.push_back({std::move(a0_), std::move(b0_)});
    }
  }
  while (!stack_.empty()) {
    Frame f = std::move(stack_.back());
    stack_.pop_back();
    if (f.a.size() >= 2) {
      std::size_t half = f.a.size() / 2;
      std::vector<Vertex> lo(f.a.begin(), f.a.begin() + half);
      std::vector<Vertex> hi(f.a.begin() + half, f.a.end());
      merge_union(lo, f.b, ubuf_);
      bool lo_bad = !s.is_query(ubuf_);
      merge_union(hi, f.b, ubuf_);
      bool hi_bad = !s.is_query(ubuf_);
      // Push the upper half first so the lower half is processed first.
      if (hi_bad) stack_.push_back({std::move(hi), f.b});
      if (lo_bad) stack_.push_back({std::move(lo), std::move(f.b)});
    } else if (f.b.size() >= 2) {
      std::size_t half = f.b.size() / 2;
      std::vector<Vertex> lo(f.b.begin(), f.b.begin() + half);
      std::vector<Vertex> hi(f.b.begin() + half, f.b.end());
      merge_union(f.a, lo, ubuf_);
      bool lo_bad = !s.is_query(ubuf_);
      merge_union(f.a, hi, ubuf_);
      bool hi_bad = !s.is_query(ubuf_);
      if (hi_bad) stack_.push_back({f.a, std::move(hi)});
      if (lo_bad) stack_.push_back({std::move(f.a), std::move(lo)});
    } else {
      // Both singletons; the pair was certified non-independent.
      return make_edge(f.a[0], f.b[0]);
    }
  }
  return std::nullopt;
}

std::uint64_t enumerate_bipartite(OracleSession& s, std::vector<Vertex> a,
                                  std::vector<Vertex> b,
                                  const std::function<void(Edge)>& sink) {
  BipartiteCross cross(normalized(std::move(a)), normalized(std::move(b)));
  std::uint64_t count = 0;
  while (auto e = cross.next(s)) {
    ++count;
    if (sink) sink(*e);
  }
  return count;
}

std::vector<Edge> find_cover(OracleSession& s, std::vector<Vertex> a) {
  auto rem = normalized(std::move(a));
  std::vector<Edge> cover;
  while (auto e = extract_edge_sorted(s, rem)) {
    cover.push_back(*e);
    auto dead = [&](Vertex v) { return v == e->u || v == e->v; };
    rem.erase(std::remove_if(rem.begin(), rem.end(), dead), rem.end());
  }
  return cover;
}

ColoringResult greedy_color(OracleSession& s, const std::vector<Vertex>& order) {
  ColoringResult res;
  std::vector<Vertex> buf;
  std::vector<Edge> seen;
  for (Vertex u : order) {
    for (std::size_t i = 0;; ++i) {
      if (i == res.parts.size()) {
        res.parts.push_back({u});
        break;
      }
      buf = res.parts[i];
      buf.insert(std::upper_bound(buf.begin(), buf.end(), u), u);
      if (s.is_query(buf)) {
        res.parts[i] = std::move(buf);
        break;
      }
      auto e = extract_edge_sorted(s, buf);
      assert(e.has_value());
      if (std::find(res.found.begin(), res.found.end(), *e) == res.found.end()) {
        res.found.push_back(*e);
      }
    }
  }
  return res;
}

EdgeStream::EdgeStream(OracleSession& s, std::vector<Vertex> subset)
    : s_(&s), remaining_(normalized(std::move(subset))) {}

bool EdgeStream::discover(Edge e) {
  int& c = charge_[edge_key(e)];
  ++c;
  max_charge_ = std::max(max_charge_, c);
  return c == 1;
}

void EdgeStream::finish_cover_phase() {
  // Cover endpoints in discovery order, smaller endpoint first per edge.
  order_.clear();
  for (Edge e : cover_) {
    order_.push_back(e.u);
    order_.push_back(e.v);
  }
  phase_ = Phase::Coloring;
  color_idx_ = 0;
  part_try_ = 0;
}

void EdgeStream::finish_coloring_phase() {
  // The leftover set (input minus cover endpoints) is independent because the
  // cover endpoints cover every induced edge. It becomes the final part even
  // when empty.
  parts_.push_back(remaining_);
  phase_ = Phase::CrossEnum;
  pair_i_ = 0;
  pair_j_ = 1;
  cross_.reset();
}

std::optional<Edge> EdgeStream::next() {
  while (phase_ != Phase::Done) {
    switch (phase_) {
      case Phase::CoverBuild: {
        auto e = extract_edge_sorted(*s_, remaining_);
        if (!e) {
          finish_cover_phase();
          break;
        }
        cover_.push_back(*e);
        auto dead = [&](Vertex v) { return v == e->u || v == e->v; };
        remaining_.erase(std::remove_if(remaining_.begin(), remaining_.end(), dead),
                         remaining_.end());
        discover(*e);  // first sighting by construction
        ++emitted_;
        return e;
      }
      case Phase::Coloring: {
        if (color_idx_ == order_.size()) {
          finish_coloring_phase();
          break;
        }
        Vertex u = order_[color_idx_];
        bool yielded = false;
        std::optional<Edge> out;
        while (true) {
          if (part_try_ == parts_.size()) {
            parts_.push_back({u});
            ++color_idx_;
            part_try_ = 0;
            break;
          }
          ubuf_ = parts_[part_try_];
          ubuf_.insert(std::upper_bound(ubuf_.begin(), ubuf_.end(), u), u);
          if (s_->is_query(ubuf_)) {
            parts_[part_try_] = std::move(ubuf_);
            ++color_idx_;
            part_try_ = 0;
            break;
          }
          auto e = extract_edge_sorted(*s_, ubuf_);
          assert(e.has_value());
          ++part_try_;
          if (discover(*e)) {
            ++emitted_;
            out = e;
            yielded = true;
            break;
          }
        }
        if (yielded) return out;
        break;
      }
      case Phase::CrossEnum: {
        if (pair_j_ >= parts_.size()) {
          phase_ = Phase::Done;
          break;
        }
        if (!cross_) {
          cross_.emplace(parts_[pair_i_], parts_[pair_j_]);
        }
        auto e = cross_->next(*s_);
        if (!e) {
          cross_.reset();
          // pairs (i, j) in increasing j, ties by increasing i
          if (++pair_i_ == pair_j_) {
            pair_i_ = 0;
            ++pair_j_;
          }
          break;
        }
        if (discover(*e)) {
          ++emitted_;
          return e;
        }
        break;
      }
      case Phase::Done:
        break;
    }
  }
  return std::nullopt;
}

std::vector<Edge> EdgeStream::drain() {
  std::vector<Edge> out;
  while (auto e = next()) out.push_back(*e);
  return out;
}

}  // namespace edgeest
