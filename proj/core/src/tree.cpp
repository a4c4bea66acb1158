#include "dyck/tree.hpp"

#include <string>
#include <utility>

#include "dyck/error.hpp"

namespace dyck {

// ---------------------------------------------------------------------------
// BinaryTree

BinaryTree BinaryTree::leaf() {
  TreeBuilder builder;
  builder.add_root();
  return std::move(builder).finish();
}

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree out;
  out.nodes_.reserve(1 + left.size() + right.size());
  out.nodes_.push_back({});
  out.root_ = 0;
  auto append = [&out](const BinaryTree& src) -> Vertex {
    if (src.empty()) return kNone;
    const auto base = static_cast<Vertex>(out.nodes_.size());
    for (const Node& n : src.nodes_) {
      out.nodes_.push_back({n.left == kNone ? kNone : n.left + base, n.right == kNone ? kNone : n.right + base});
    }
    return src.root_ + base;
  };
  const Vertex l = append(left);
  const Vertex r = append(right);
  out.nodes_[0] = {l, r};
  return out;
}

BinaryTree BinaryTree::subtree(Vertex v) const {
  TreeBuilder builder;
  if (v == kNone) return std::move(builder).finish();
  struct Item {
    Vertex src;
    Vertex dst;
  };
  std::vector<Item> stack{{v, builder.add_root()}};
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    if (const Vertex r = right(item.src); r != kNone) stack.push_back({r, builder.add_right(item.dst)});
    if (const Vertex l = left(item.src); l != kNone) stack.push_back({l, builder.add_left(item.dst)});
  }
  return std::move(builder).finish();
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<std::pair<BinaryTree::Vertex, BinaryTree::Vertex>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    const auto [u, v] = stack.back();
    stack.pop_back();
    const bool u_none = (u == BinaryTree::kNone);
    if (u_none != (v == BinaryTree::kNone)) return false;
    if (u_none) continue;
    stack.emplace_back(a.left(u), b.left(v));
    stack.emplace_back(a.right(u), b.right(v));
  }
  return true;
}

// ---------------------------------------------------------------------------
// TreeBuilder

TreeBuilder::Vertex TreeBuilder::add_root() {
  if (!tree_.nodes_.empty()) throw Error(Errc::kInternal, "tree already has a root");
  tree_.nodes_.push_back({});
  tree_.root_ = 0;
  return 0;
}

TreeBuilder::Vertex TreeBuilder::add_left(Vertex parent) {
  const auto v = static_cast<Vertex>(tree_.nodes_.size());
  if (tree_.nodes_.at(parent).left != BinaryTree::kNone) throw Error(Errc::kInternal, "left child already present");
  tree_.nodes_.push_back({});
  tree_.nodes_[parent].left = v;
  return v;
}

TreeBuilder::Vertex TreeBuilder::add_right(Vertex parent) {
  const auto v = static_cast<Vertex>(tree_.nodes_.size());
  if (tree_.nodes_.at(parent).right != BinaryTree::kNone) throw Error(Errc::kInternal, "right child already present");
  tree_.nodes_.push_back({});
  tree_.nodes_[parent].right = v;
  return v;
}

BinaryTree TreeBuilder::finish() && { return std::move(tree_); }

// ---------------------------------------------------------------------------
// Codec

DyckWord encode_tree(const BinaryTree& tree) {
  if (tree.empty()) throw Error(Errc::kEmptyTree, "cannot encode the empty tree");
  using Vertex = BinaryTree::Vertex;
  struct Task {
    Vertex v;
    bool close_first;  // emit "11" before the right subtree of a two-child vertex
  };
  std::string w;
  w.reserve(2 * tree.size());
  w += '0';
  std::vector<Task> stack{{tree.root(), false}};
  while (!stack.empty()) {
    const Task task = stack.back();
    stack.pop_back();
    if (task.close_first) w += "11";
    const Vertex l = tree.left(task.v);
    const Vertex r = tree.right(task.v);
    if (l != BinaryTree::kNone && r == BinaryTree::kNone) {
      w += "01";
      stack.push_back({l, false});
    } else if (l == BinaryTree::kNone && r != BinaryTree::kNone) {
      w += "10";
      stack.push_back({r, false});
    } else if (l != BinaryTree::kNone && r != BinaryTree::kNone) {
      w += "00";
      stack.push_back({r, true});
      stack.push_back({l, false});
    }
  }
  w += '1';
  return DyckWord(std::move(w));
}

BinaryTree decode_word(const DyckWord& word) {
  const std::string_view inner = std::string_view(word.str()).substr(1, word.size() - 2);
  if (inner.size() % 2 != 0) throw Error(Errc::kCorruptWord, "inner word has odd length");

  TreeBuilder builder;
  auto current = builder.add_root();
  std::vector<BinaryTree::Vertex> saved;
  for (std::size_t k = 0; k < inner.size(); k += 2) {
    const char a = inner[k];
    const char b = inner[k + 1];
    if (a == '0' && b == '1') {
      current = builder.add_left(current);
    } else if (a == '1' && b == '0') {
      current = builder.add_right(current);
    } else if (a == '0') {  // 00
      saved.push_back(current);
      current = builder.add_left(current);
    } else {  // 11
      if (saved.empty()) {
        throw Error(Errc::kCorruptWord, "'11' at inner offset " + std::to_string(k) + " with empty stack", k);
      }
      current = saved.back();
      saved.pop_back();
      current = builder.add_right(current);
    }
  }
  if (!saved.empty()) throw Error(Errc::kCorruptWord, "unmatched '00' left on the stack");
  return std::move(builder).finish();
}

std::vector<BinaryTree> enumerate_trees(std::size_t n) {
  std::vector<std::vector<BinaryTree>> by_size(n + 1);
  by_size[0].emplace_back();
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t left = 0; left < m; ++left) {
      for (const auto& l : by_size[left]) {
        for (const auto& r : by_size[m - 1 - left]) by_size[m].push_back(BinaryTree::node(l, r));
      }
    }
  }
  return std::move(by_size[n]);
}

std::string format_tree(const BinaryTree& tree) {
  using Vertex = BinaryTree::Vertex;
  constexpr Vertex kClose = BinaryTree::kNone - 1;
  std::string out;
  out.reserve(3 * tree.size() + 1);
  std::vector<Vertex> stack{tree.root()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == kClose) {
      out += ')';
    } else if (v == BinaryTree::kNone) {
      out += '.';
    } else {
      out += '(';
      stack.push_back(kClose);
      stack.push_back(tree.right(v));
      stack.push_back(tree.left(v));
    }
  }
  return out;
}

BinaryTree parse_tree(std::string_view text) {
  using Vertex = BinaryTree::Vertex;
  struct Frame {
    Vertex v;
    int next;  // 0: left subtree, 1: right subtree, 2: closing ')'
  };
  auto fail = [&](std::size_t pos, const char* expected) -> Error {
    const std::string got = pos < text.size() ? std::string("'") + text[pos] + "'" : std::string("end of input");
    return Error(Errc::kParseError, "tree parse error at offset " + std::to_string(pos) + ": expected " + expected +
                                        ", got " + got, pos);
  };

  TreeBuilder builder;
  std::vector<Frame> stack;
  std::size_t pos = 0;
  bool root_seen = false;
  while (!root_seen || !stack.empty()) {
    if (!stack.empty() && stack.back().next == 2) {
      if (pos >= text.size() || text[pos] != ')') throw fail(pos, "')'");
      ++pos;
      stack.pop_back();
      continue;
    }
    if (pos >= text.size() || (text[pos] != '.' && text[pos] != '(')) throw fail(pos, "'.' or '('");
    const bool is_node = text[pos] == '(';
    ++pos;
    if (stack.empty()) {
      root_seen = true;
      if (is_node) stack.push_back({builder.add_root(), 0});
      continue;
    }
    Frame& parent = stack.back();
    const int side = parent.next++;
    if (is_node) {
      const Vertex v = side == 0 ? builder.add_left(parent.v) : builder.add_right(parent.v);
      stack.push_back({v, 0});
    }
  }
  if (pos != text.size()) throw fail(pos, "end of input");
  return std::move(builder).finish();
}

}  // namespace dyck
