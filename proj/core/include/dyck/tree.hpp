#pragma once

// Binary trees and their Dyck word encoding.
//
// A tree with n vertices maps to a Dyck word of semilength n:
//
//   encode(B)  = "0" body(B) "1"
//   body(leaf) = ""
//   body(B)    = "01" body(L)               if only the left child exists
//              = "10" body(R)               if only the right child exists
//              = "00" body(L) "11" body(R)  if both exist
//
// Decoding reads the inner word two symbols at a time; "00" saves the
// current vertex on a stack and "11" returns to it before drawing its right
// edge.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/word.hpp"

namespace dyck {

/// Immutable-by-convention binary tree stored as a node arena. Vertex ids
/// are indices into the arena; kNone marks a missing child. Equality is
/// structural and independent of the arena layout.
class BinaryTree {
 public:
  using Vertex = std::uint32_t;
  static constexpr Vertex kNone = UINT32_MAX;

  BinaryTree() = default;  // empty tree

  static BinaryTree leaf();
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);

  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t size() const noexcept { return nodes_.size(); }
  Vertex root() const noexcept { return empty() ? kNone : root_; }
  Vertex left(Vertex v) const noexcept { return nodes_[v].left; }
  Vertex right(Vertex v) const noexcept { return nodes_[v].right; }

  /// Copy of the subtree hanging at `v` (empty when v == kNone).
  BinaryTree subtree(Vertex v) const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);

 private:
  friend class TreeBuilder;

  struct Node {
    Vertex left = kNone;
    Vertex right = kNone;
  };

  std::vector<Node> nodes_;
  Vertex root_ = 0;
};

/// Incremental construction used by the decoder and the text parser.
class TreeBuilder {
 public:
  using Vertex = BinaryTree::Vertex;

  Vertex add_root();
  Vertex add_left(Vertex parent);
  Vertex add_right(Vertex parent);
  BinaryTree finish() &&;

 private:
  BinaryTree tree_;
};

/// Throws kEmptyTree for the empty tree.
DyckWord encode_tree(const BinaryTree& tree);

/// Inverse of encode_tree. kCorruptWord signals a broken decoder invariant.
BinaryTree decode_word(const DyckWord& word);

/// Every binary tree with exactly n vertices, each once (C_n of them).
std::vector<BinaryTree> enumerate_trees(std::size_t n);

/// "." for the empty tree, "(" left right ")" for a vertex.
std::string format_tree(const BinaryTree& tree);

/// Inverse of format_tree; kParseError with the byte offset of the first
/// violation of T := "." | "(" T T ")".
BinaryTree parse_tree(std::string_view text);

}  // namespace dyck
