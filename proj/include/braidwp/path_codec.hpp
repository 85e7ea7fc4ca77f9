#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidwp/free_word.hpp"

namespace braidwp {

// One waypoint of a path relative to the punctures k_1..k_n.  point is -1 for
// the base point u (always written (-1,0)); otherwise position -1/0/+1 means
// just below k_point, at k_point, or just above it.
struct Link {
  int point = -1;
  int position = 0;

  static constexpr Link base() { return {-1, 0}; }
  constexpr bool is_base() const { return point == -1; }

  friend constexpr bool operator==(Link, Link) = default;
};

// A single g-base element: starts at (-1,0) and ends at a terminal (p,0).
// The serialized separator (-1,0) that follows each path is not stored.
class PathList {
 public:
  PathList(int punctures, std::vector<Link> links);

  int punctures() const { return punctures_; }
  std::span<const Link> links() const { return links_; }
  std::size_t size() const { return links_.size(); }
  int terminal_point() const;

  friend bool operator==(const PathList&, const PathList&) = default;

 private:
  int punctures_;
  std::vector<Link> links_;
};

struct Violation {
  std::size_t index;  // offending link
  std::string what;
};

std::vector<Violation> validate_path(const PathList& path);

// Ordered n-tuple of paths whose terminal points permute 1..n.
class GBase {
 public:
  explicit GBase(std::vector<PathList> paths);

  int punctures() const { return static_cast<int>(paths_.size()); }
  std::span<const PathList> paths() const { return paths_; }
  const PathList& operator[](std::size_t i) const { return paths_[i]; }

  friend bool operator==(const GBase&, const GBase&) = default;

 private:
  std::vector<PathList> paths_;
};

GBase standard_gbase(int n);

FGWord path_to_syntactic(const PathList& path);
PathList syntactic_to_path(const FGWord& w);
PathList reduce_path(const PathList& path);

std::vector<PathList> split_gbase(std::span<const Link> serialized, int n);
std::vector<Link> join_gbase(std::span<const PathList> paths);

// "(p,q),(p,q),..."; whitespace-insensitive, commas between links optional.
std::vector<Link> parse_links(std::string_view text);
std::string format_links(std::span<const Link> links);

// A single path; a trailing (-1,0) separator is accepted and dropped.
PathList parse_path(std::string_view text, int punctures);
// With terminated set, the (-1,0) separator is appended.
std::string format_path(const PathList& path, bool terminated = false);

GBase parse_gbase(std::string_view text, int n);
std::string format_gbase(const GBase& g);

// SVG drawing: punctures on a horizontal axis, u below, one polyline per path.
std::string render_svg(std::span<const PathList> paths);

}  // namespace braidwp
