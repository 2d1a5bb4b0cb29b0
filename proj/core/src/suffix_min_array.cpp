#include "csst/suffix_min_array.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace csst {

namespace {

// Walks the full binary layout from (start, end, depth) towards [pos, pos]
// and returns the depth of that single-index range.
unsigned leaf_depth(Index pos, Index start, Index end, unsigned depth) {
  while (start < end) {
    const Index mid = start + (end - start) / 2;
    if (pos <= mid) {
      end = mid;
    } else {
      start = mid + 1;
    }
    ++depth;
  }
  return depth;
}

// Depth of [start, end] in the layout over [0, capacity), or nullopt when the
// range is not a layout range.
std::optional<unsigned> layout_depth(Index start, Index end, std::size_t capacity) {
  Index s = 0;
  Index e = static_cast<Index>(capacity - 1);
  unsigned depth = 0;
  while (true) {
    if (s == start && e == end) return depth;
    if (s == e || start < s || end > e) return std::nullopt;
    const Index mid = s + (e - s) / 2;
    if (end <= mid) {
      e = mid;
    } else if (start > mid) {
      s = mid + 1;
    } else {
      return std::nullopt;
    }
    ++depth;
  }
}

}  // namespace

SuffixMinArray::SuffixMinArray(std::size_t capacity, std::size_t block_threshold)
    : capacity_(capacity), block_threshold_(block_threshold) {
  if (capacity == 0) throw std::invalid_argument("suffix-min array capacity must be positive");
  if (block_threshold == 0) throw std::invalid_argument("block threshold must be positive");
  if (capacity > kInfinity) throw std::invalid_argument("suffix-min array capacity too large");
  configure_layout();
}

void SuffixMinArray::configure_layout() {
  // Smallest depth D with 2^D >= capacity / b, i.e. 2^D * b >= capacity.
  block_depth_ = 0;
  while ((std::size_t{1} << block_depth_) * block_threshold_ < capacity_) ++block_depth_;
  const std::size_t parts = std::size_t{1} << block_depth_;
  block_stride_ = (capacity_ + parts - 1) / parts;
  // Ranges of one index are plain leaves, so a stride of one disables blocks.
  blocks_enabled_ = block_stride_ >= 2;
}

bool SuffixMinArray::block_level(unsigned depth, Index start, Index end) const noexcept {
  return blocks_enabled_ && depth >= block_depth_ && end > start;
}

std::int32_t SuffixMinArray::new_node(Index start, Index end, unsigned depth) {
  Node nd;
  nd.start = start;
  nd.end = end;
  nd.depth = static_cast<std::uint8_t>(depth);
  if (!free_nodes_.empty()) {
    const std::int32_t id = free_nodes_.back();
    free_nodes_.pop_back();
    nodes_[id] = nd;
    return id;
  }
  nodes_.push_back(nd);
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

std::int32_t SuffixMinArray::new_leaf(Index pos, Index value, Index from_start, Index from_end,
                                      unsigned from_depth) {
  const std::int32_t id = new_node(pos, pos, leaf_depth(pos, from_start, from_end, from_depth));
  nodes_[id].min = value;
  nodes_[id].pos = pos;
  return id;
}

std::int32_t SuffixMinArray::new_block_node(Index start, Index end, unsigned depth) {
  const std::int32_t id = new_node(start, end, depth);
  std::int32_t block;
  if (!free_blocks_.empty()) {
    block = free_blocks_.back();
    free_blocks_.pop_back();
  } else {
    block = static_cast<std::int32_t>(block_values_.size() / block_stride_);
    block_values_.resize(block_values_.size() + block_stride_, kInfinity);
  }
  nodes_[id].block = block;
  return id;
}

void SuffixMinArray::free_node(std::int32_t id) {
  Node& nd = nodes_[id];
  if (nd.is_block()) {
    const auto first = block_values_.begin() + static_cast<std::ptrdiff_t>(nd.block * block_stride_);
    std::fill(first, first + static_cast<std::ptrdiff_t>(block_stride_), kInfinity);
    free_blocks_.push_back(nd.block);
  }
  nd = Node{};
  free_nodes_.push_back(id);
}

void SuffixMinArray::block_write(std::int32_t id, Index i, Index value) {
  Node& nd = nodes_[id];
  slot(nd, i) = value;
  ++nd.block_count;
  if (better(value, i, nd.min, nd.pos)) {
    nd.min = value;
    nd.pos = i;
  }
}

void SuffixMinArray::refresh_block_top(std::int32_t id) {
  Node& nd = nodes_[id];
  nd.min = kInfinity;
  nd.pos = nd.start;
  for (Index i = nd.start; i <= nd.end; ++i) {
    const Index v = slot(nd, i);
    if (v != kInfinity && better(v, i, nd.min, nd.pos)) {
      nd.min = v;
      nd.pos = i;
    }
  }
}

void SuffixMinArray::update(Index i, Index value) {
  if (i >= capacity_) {
    throw std::out_of_range("suffix-min update at " + std::to_string(i) + " outside capacity " +
                            std::to_string(capacity_));
  }
  ++version_;
  if (remove(i)) --density_;
  if (value == kInfinity) return;
  insert(i, value);
  ++density_;
}

void SuffixMinArray::insert(Index pos, Index value) {
  if (root_ == kNil) {
    const Index last = static_cast<Index>(capacity_ - 1);
    if (block_level(0, 0, last)) {
      root_ = new_block_node(0, last, 0);
      block_write(root_, pos, value);
    } else {
      root_ = new_node(0, last, 0);
      nodes_[root_].min = value;
      nodes_[root_].pos = pos;
    }
    return;
  }

  std::int32_t cur = root_;
  while (true) {
    Node& nd = nodes_[cur];
    if (nd.is_block()) {
      block_write(cur, pos, value);
      return;
    }
    assert(nd.start < nd.end && "single-index leaves never receive a second entry");
    if (better(value, pos, nd.min, nd.pos)) {
      std::swap(nd.min, value);
      std::swap(nd.pos, pos);
    }
    const bool go_left = pos <= nd.mid();
    const std::int32_t child = go_left ? nd.left : nd.right;
    if (child == kNil) {
      const Index s = go_left ? nd.start : nd.mid() + 1;
      const Index e = go_left ? nd.mid() : nd.end;
      const unsigned d = nd.depth + 1u;
      const std::int32_t leaf = new_leaf(pos, value, s, e, d);
      (go_left ? nodes_[cur].left : nodes_[cur].right) = leaf;
      return;
    }
    if (nodes_[child].covers(pos)) {
      cur = child;
      continue;
    }
    insert_lca(cur, go_left, pos, value);
    return;
  }
}

void SuffixMinArray::insert_lca(std::int32_t parent, bool left_side, Index pos, Index value) {
  const Node p = nodes_[parent];
  const std::int32_t child = left_side ? p.left : p.right;
  const Node c = nodes_[child];

  Index s = left_side ? p.start : p.mid() + 1;
  Index e = left_side ? p.mid() : p.end;
  unsigned d = p.depth + 1u;
  while (!(blocks_enabled_ && d >= block_depth_)) {
    const Index m = s + (e - s) / 2;
    if (pos <= m && c.end <= m) {
      e = m;
    } else if (pos > m && c.start > m) {
      s = m + 1;
    } else {
      break;
    }
    ++d;
  }

  if (block_level(d, s, e)) {
    // Below the block level only single-index leaves exist.
    assert(c.start == c.end);
    const std::int32_t id = new_block_node(s, e, d);
    block_write(id, c.pos, c.min);
    block_write(id, pos, value);
    free_node(child);
    (left_side ? nodes_[parent].left : nodes_[parent].right) = id;
    return;
  }

  const std::int32_t id = new_node(s, e, d);
  (left_side ? nodes_[parent].left : nodes_[parent].right) = id;
  Node& r = nodes_[id];
  const bool child_left = c.end <= r.mid();
  (child_left ? r.left : r.right) = child;
  if (better(value, pos, c.min, c.pos)) {
    r.min = value;
    r.pos = pos;
    return;
  }
  r.min = c.min;
  r.pos = c.pos;
  pop_top(child_left ? &r.left : &r.right);
  // The new entry lies on the side opposite to the old child, which is empty.
  const Node& rr = nodes_[id];
  const bool pos_left = pos <= rr.mid();
  const Index ls = pos_left ? rr.start : rr.mid() + 1;
  const Index le = pos_left ? rr.mid() : rr.end;
  const std::int32_t leaf = new_leaf(pos, value, ls, le, d + 1u);
  (pos_left ? nodes_[id].left : nodes_[id].right) = leaf;
}

bool SuffixMinArray::remove(Index pos) {
  std::int32_t* ref = &root_;
  while (*ref != kNil) {
    Node& nd = nodes_[*ref];
    if (!nd.covers(pos)) return false;
    if (nd.is_block()) {
      Index& v = slot(nd, pos);
      if (v == kInfinity) return false;
      v = kInfinity;
      if (--nd.block_count == 0) {
        free_node(*ref);
        *ref = kNil;
      } else if (nd.pos == pos) {
        refresh_block_top(*ref);
      }
      return true;
    }
    if (nd.pos == pos) {
      pop_top(ref);
      return true;
    }
    ref = pos <= nd.mid() ? &nd.left : &nd.right;
  }
  return false;
}

// Removes the pair stored at *ref and refills the node from its children,
// promoting the best child pair one level at a time.
void SuffixMinArray::pop_top(std::int32_t* ref) {
  while (true) {
    const std::int32_t id = *ref;
    Node& nd = nodes_[id];
    if (nd.is_block()) {
      slot(nd, nd.pos) = kInfinity;
      if (--nd.block_count == 0) {
        free_node(id);
        *ref = kNil;
      } else {
        refresh_block_top(id);
      }
      return;
    }
    if (nd.left == kNil && nd.right == kNil) {
      free_node(id);
      *ref = kNil;
      return;
    }
    bool take_left;
    if (nd.left == kNil) {
      take_left = false;
    } else if (nd.right == kNil) {
      take_left = true;
    } else {
      const Node& l = nodes_[nd.left];
      const Node& r = nodes_[nd.right];
      take_left = better(l.min, l.pos, r.min, r.pos);
    }
    const Node& src = nodes_[take_left ? nd.left : nd.right];
    nd.min = src.min;
    nd.pos = src.pos;
    ref = take_left ? &nd.left : &nd.right;
  }
}

Index SuffixMinArray::at(Index i) const {
  if (i >= capacity_) throw std::out_of_range("suffix-min index outside capacity");
  std::int32_t id = root_;
  while (id != kNil) {
    const Node& nd = nodes_[id];
    if (!nd.covers(i)) return kInfinity;
    if (nd.is_block()) return slot(nd, i);
    if (nd.pos == i) return nd.min;
    id = i <= nd.mid() ? nd.left : nd.right;
  }
  return kInfinity;
}

Index SuffixMinArray::min_suffix(Index i, QueryStats* stats) const {
  if (i >= capacity_) {
    throw std::out_of_range("suffix-min query at " + std::to_string(i) + " outside capacity " +
                            std::to_string(capacity_));
  }
  return min_rec(root_, i, 0, stats);
}

Index SuffixMinArray::min_rec(std::int32_t id, Index i, std::size_t level,
                              QueryStats* stats) const {
  if (id == kNil) return kInfinity;
  const Node& nd = nodes_[id];
  if (i > nd.end) return kInfinity;
  if (stats != nullptr) {
    ++stats->visited;
    stats->max_level = std::max(stats->max_level, level);
  }
  // nd.min is the minimum of the whole subtree, so it answers the query as
  // soon as its position lies in the suffix.
  if (nd.pos >= i) return nd.min;
  if (nd.is_block()) {
    Index best = kInfinity;
    for (Index j = std::max(i, nd.start); j <= nd.end; ++j) best = std::min(best, slot(nd, j));
    return best;
  }
  const Index l = min_rec(nd.left, i, level + 1, stats);
  const Index r = min_rec(nd.right, i, level + 1, stats);
  return l < r ? l : r;
}

std::optional<Index> SuffixMinArray::argleq(Index value, QueryStats* stats) const {
  if (value == kInfinity) value = kInfinity - 1;
  const std::int64_t found = argleq_rec(root_, value, 0, stats);
  if (found < 0) return std::nullopt;
  return static_cast<Index>(found);
}

std::int64_t SuffixMinArray::argleq_rec(std::int32_t id, Index value, std::size_t level,
                                        QueryStats* stats) const {
  if (id == kNil) return -1;
  const Node& nd = nodes_[id];
  if (nd.min > value) return -1;
  if (stats != nullptr) {
    ++stats->visited;
    stats->max_level = std::max(stats->max_level, level);
  }
  if (nd.is_block()) {
    for (Index j = nd.end + 1; j-- > nd.start;) {
      if (slot(nd, j) <= value) return j;
    }
    return -1;
  }
  // An absent child behaves as if its range ended at -infinity.
  const std::int64_t left_end = nd.left == kNil ? -1 : nodes_[nd.left].end;
  const std::int64_t right_end = nd.right == kNil ? -1 : nodes_[nd.right].end;
  const std::int64_t here = nd.pos;
  if (here >= left_end && here >= right_end) return here;
  if (nd.right != kNil && nodes_[nd.right].min <= value) {
    return std::max(here, argleq_rec(nd.right, value, level + 1, stats));
  }
  return std::max(here, argleq_rec(nd.left, value, level + 1, stats));
}

std::size_t SuffixMinArray::height() const { return height_rec(root_); }

std::size_t SuffixMinArray::height_rec(std::int32_t id) const {
  if (id == kNil) return 0;
  const Node& nd = nodes_[id];
  return 1 + std::max(height_rec(nd.left), height_rec(nd.right));
}

void SuffixMinArray::grow(std::size_t new_capacity) {
  if (new_capacity < capacity_) throw std::invalid_argument("suffix-min array cannot shrink");
  if (new_capacity == capacity_) return;
  if (new_capacity > kInfinity) throw std::invalid_argument("suffix-min array capacity too large");
  const auto kept = entries();
  clear();
  capacity_ = new_capacity;
  configure_layout();
  for (const auto& [i, v] : kept) insert(i, v);
  density_ = kept.size();
  ++version_;
}

void SuffixMinArray::clear() {
  nodes_.clear();
  free_nodes_.clear();
  block_values_.clear();
  free_blocks_.clear();
  root_ = kNil;
  density_ = 0;
  ++version_;
}

std::vector<std::pair<Index, Index>> SuffixMinArray::entries() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(density_);
  for (const NodeView& view : nodes()) {
    if (view.block) {
      out.insert(out.end(), view.slots.begin(), view.slots.end());
    } else {
      out.emplace_back(view.pos, view.min);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SuffixMinArray::NodeView> SuffixMinArray::nodes() const {
  std::vector<NodeView> out;
  nodes_rec(root_, 0, out);
  return out;
}

void SuffixMinArray::nodes_rec(std::int32_t id, unsigned level, std::vector<NodeView>& out) const {
  if (id == kNil) return;
  const Node& nd = nodes_[id];
  NodeView view;
  view.start = nd.start;
  view.end = nd.end;
  view.min = nd.min;
  view.pos = nd.pos;
  view.layout_depth = nd.depth;
  view.level = level;
  view.block = nd.is_block();
  if (view.block) {
    for (Index i = nd.start; i <= nd.end; ++i) {
      if (slot(nd, i) != kInfinity) view.slots.emplace_back(i, slot(nd, i));
    }
  }
  out.push_back(std::move(view));
  nodes_rec(nd.left, level + 1, out);
  nodes_rec(nd.right, level + 1, out);
}

std::string SuffixMinArray::to_string() const {
  std::string out;
  if (root_ == kNil) return "-";
  render_rec(root_, out);
  return out;
}

void SuffixMinArray::render_rec(std::int32_t id, std::string& out) const {
  if (id == kNil) {
    out += '-';
    return;
  }
  const Node& nd = nodes_[id];
  out += '[' + std::to_string(nd.start) + ',' + std::to_string(nd.end) + ']';
  if (nd.is_block()) out += 'B';
  out += '(' + std::to_string(nd.min) + ',' + std::to_string(nd.pos) + ')';
  if (nd.left != kNil || nd.right != kNil) {
    out += '{';
    render_rec(nd.left, out);
    out += ',';
    render_rec(nd.right, out);
    out += '}';
  }
}

std::string SuffixMinArray::check_invariants() const {
  std::ostringstream err;
  std::size_t seen = 0;
  std::vector<bool> used(capacity_, false);

  // Returns the best (value, index) in the subtree, checking every node on
  // the way; fills err on the first violation.
  struct Walker {
    const SuffixMinArray& self;
    std::ostringstream& err;
    std::size_t& seen;
    std::vector<bool>& used;

    bool claim(Index i) {
      if (used[i]) {
        err << "index " << i << " stored twice";
        return false;
      }
      used[i] = true;
      ++seen;
      return true;
    }

    // Collects the subtree's entries; returns false on violation.
    bool walk(std::int32_t id, Index lo, Index hi, std::vector<std::pair<Index, Index>>& out) {
      const Node& nd = self.nodes_[id];
      if (nd.start < lo || nd.end > hi || nd.start > nd.end) {
        err << "node [" << nd.start << "," << nd.end << "] escapes [" << lo << "," << hi << "]";
        return false;
      }
      const auto depth = layout_depth(nd.start, nd.end, self.capacity_);
      if (!depth || *depth != nd.depth) {
        err << "node [" << nd.start << "," << nd.end << "] is not a layout range at depth "
            << unsigned{nd.depth};
        return false;
      }
      if (nd.is_block()) {
        if (nd.left != kNil || nd.right != kNil || !self.block_level(nd.depth, nd.start, nd.end) ||
            nd.depth != self.block_depth_) {
          err << "misplaced block node [" << nd.start << "," << nd.end << "]";
          return false;
        }
        std::uint32_t count = 0;
        Index best_v = kInfinity;
        Index best_p = nd.start;
        for (Index i = nd.start; i <= nd.end; ++i) {
          const Index v = self.slot(nd, i);
          if (v == kInfinity) continue;
          ++count;
          if (!claim(i)) return false;
          out.emplace_back(i, v);
          if (better(v, i, best_v, best_p)) {
            best_v = v;
            best_p = i;
          }
        }
        if (count == 0 || count != nd.block_count || best_v != nd.min || best_p != nd.pos) {
          err << "block node [" << nd.start << "," << nd.end << "] has a stale summary";
          return false;
        }
        return true;
      }
      if (nd.min == kInfinity || !nd.covers(nd.pos)) {
        err << "node [" << nd.start << "," << nd.end << "] holds no valid entry";
        return false;
      }
      if (self.blocks_enabled_ && nd.start != nd.end && nd.depth >= self.block_depth_) {
        err << "tree node [" << nd.start << "," << nd.end << "] below the block level";
        return false;
      }
      if (!claim(nd.pos)) return false;
      std::vector<std::pair<Index, Index>> below;
      if (nd.left != kNil && !walk(nd.left, nd.start, nd.mid(), below)) return false;
      if (nd.right != kNil && !walk(nd.right, nd.mid() + 1, nd.end, below)) return false;
      for (const auto& [i, v] : below) {
        if (!better(nd.min, nd.pos, v, i)) {
          err << "node [" << nd.start << "," << nd.end << "] pair (" << nd.min << "," << nd.pos
              << ") does not dominate descendant (" << v << "," << i << ")";
          return false;
        }
      }
      out.emplace_back(nd.pos, nd.min);
      out.insert(out.end(), below.begin(), below.end());
      return true;
    }
  };

  if (root_ != kNil) {
    const Node& root = nodes_[root_];
    if (root.start != 0 || root.end != capacity_ - 1) {
      return "root does not cover the whole array";
    }
    Walker walker{*this, err, seen, used};
    std::vector<std::pair<Index, Index>> all;
    if (!walker.walk(root_, 0, static_cast<Index>(capacity_ - 1), all)) return err.str();
  }
  if (seen != density_) {
    return "density counter " + std::to_string(density_) + " but " + std::to_string(seen) +
           " stored entries";
  }
  return {};
}

}  // namespace csst
