#include "braidwp/path_codec.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>

#include "braidwp/error.hpp"

namespace braidwp {

PathList::PathList(int punctures, std::vector<Link> links)
    : punctures_(punctures), links_(std::move(links)) {
  if (punctures < 1) throw AmbientMismatch("a path needs at least one puncture");
}

int PathList::terminal_point() const { return links_.empty() ? -1 : links_.back().point; }

std::vector<Violation> validate_path(const PathList& path) {
  std::vector<Violation> out;
  const auto links = path.links();
  const int n = path.punctures();
  if (links.empty()) {
    out.push_back({0, "empty path"});
    return out;
  }
  if (links.front() != Link::base()) out.push_back({0, "path must start at (-1,0)"});

  for (std::size_t i = 0; i < links.size(); ++i) {
    const Link l = links[i];
    const bool last = i + 1 == links.size();
    if (l.point == -1) {
      if (l.position != 0) out.push_back({i, "the base point is only written (-1,0)"});
      if (i != 0) out.push_back({i, "base point inside a path"});
    } else if (l.point < 1 || l.point > n) {
      out.push_back({i, "point " + std::to_string(l.point) + " outside 1.." + std::to_string(n)});
    }
    if (l.position < -1 || l.position > 1) {
      out.push_back({i, "position " + std::to_string(l.position) + " not in {-1,0,1}"});
    }
    if (l.point >= 1 && l.position == 0 && !last) {
      out.push_back({i, "terminal link before the end of the path"});
    }
    if (i > 0) {
      const Link prev = links[i - 1];
      if (prev.is_base() && l.position == -1) {
        out.push_back({i, "base point connected to a below-link"});
      }
      if (!prev.is_base() && !l.is_base() && std::abs(prev.point - l.point) > 1) {
        out.push_back({i, "jump from point " + std::to_string(prev.point) + " to " +
                              std::to_string(l.point)});
      }
    }
  }
  const Link tail = links.back();
  if (tail.point < 1 || tail.position != 0) {
    out.push_back({links.size() - 1, "path must end at a puncture (p,0)"});
  }
  return out;
}

namespace {

void require_valid(const PathList& path) {
  auto v = validate_path(path);
  if (!v.empty()) {
    throw ValidationError("link " + std::to_string(v.front().index) + ": " + v.front().what);
  }
}

}  // namespace

GBase::GBase(std::vector<PathList> paths) : paths_(std::move(paths)) {
  const int n = static_cast<int>(paths_.size());
  if (n < 1) throw ValidationError("a g-base needs at least one path");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const auto& p = paths_[i];
    if (p.punctures() != n) {
      throw AmbientMismatch("path " + std::to_string(i + 1) + " is over " +
                            std::to_string(p.punctures()) + " punctures, expected " +
                            std::to_string(n));
    }
    auto v = validate_path(p);
    if (!v.empty()) {
      throw ValidationError("path " + std::to_string(i + 1) + ", link " +
                            std::to_string(v.front().index) + ": " + v.front().what);
    }
    const int t = p.terminal_point();
    if (seen[t]) {
      throw ValidationError("terminal point " + std::to_string(t) + " used twice");
    }
    seen[t] = true;
  }
}

GBase standard_gbase(int n) {
  if (n < 1) throw AmbientMismatch("standard g-base needs n >= 1");
  std::vector<PathList> paths;
  paths.reserve(n);
  for (int i = 1; i <= n; ++i) paths.emplace_back(n, std::vector<Link>{Link::base(), {i, 0}});
  return GBase(std::move(paths));
}

FGWord path_to_syntactic(const PathList& path) {
  require_valid(path);
  const auto links = path.links();
  const std::size_t len = links.size();

  // Emissions are resolved back to front: a circle (i,1)->(i,-1)->(i,1) takes
  // the letter of the later above-link.
  std::vector<std::optional<FGLetter>> emitted(len);
  for (std::size_t idx = len - 1; idx >= 1; --idx) {
    const Link l = links[idx];
    if (l.position == 0) {
      emitted[idx] = FGLetter(l.point, 1);
      continue;
    }
    if (l.position == -1) continue;

    const int p = l.point;
    const Link next = links[idx + 1];
    if (next.point == p - 1) {
      emitted[idx] = FGLetter(p, 1);
    } else if (next.point == p + 1) {
      emitted[idx] = FGLetter(p, -1);
    } else if (next.position != 0) {
      // next is at the same point and not terminal, so a second-next exists
      const Link second = links[idx + 2];
      if (second.point == p - 1) {
        emitted[idx] = FGLetter(p, -1);
      } else if (second.point == p + 1) {
        emitted[idx] = FGLetter(p, 1);
      } else if (second.position == 1) {
        emitted[idx] = emitted[idx + 2];
      }
    }
    // an above-link that drops onto its own terminal puncture crosses nothing
  }

  std::vector<FGLetter> word;
  word.reserve(2 * len);
  for (const auto& e : emitted) {
    if (e) word.push_back(*e);
  }
  const std::size_t l = word.size();
  for (std::size_t i = l - 1; i-- > 0;) word.push_back(word[i].inverse());
  return FGWord(path.punctures(), std::move(word));
}

PathList syntactic_to_path(const FGWord& w) {
  if (!conjugate_shape(w)) {
    throw ShapeError("word is not of the form Q^{-1} g Q: " + format_word(w));
  }
  if (!is_reduced(w)) throw ShapeError("word is not freely reduced: " + format_word(w));

  const auto letters = w.letters();
  const std::size_t scan = (letters.size() + 1) / 2;  // through the middle letter
  std::vector<Link> out;
  out.reserve(2 + scan * 2);
  out.push_back(Link::base());

  int last_point = letters[0].index();
  int last_sign = letters[0].sign();
  out.push_back({last_point, 1});
  for (std::size_t k = 1; k < scan; ++k) {
    const int cur = letters[k].index();
    const int sign = letters[k].sign();
    if (last_sign < 0) {
      if (last_point < cur) {
        for (int c = last_point + 1; c <= cur - 1; ++c) out.push_back({c, -1});
        if (sign > 0) out.push_back({cur, -1});
      } else {
        for (int c = last_point; c >= cur + 1; --c) out.push_back({c, -1});
        if (sign < 0) out.push_back({cur, -1});
      }
    } else {
      if (last_point > cur) {
        for (int c = last_point - 1; c >= cur + 1; --c) out.push_back({c, -1});
        if (sign < 0) out.push_back({cur, -1});
      } else {
        for (int c = last_point; c <= cur - 1; ++c) out.push_back({c, -1});
        if (sign > 0) out.push_back({cur, -1});
      }
    }
    out.push_back({cur, 1});
    last_point = cur;
    last_sign = sign;
  }
  out.back().position = 0;
  // a dip below the end point just before reaching it is homotopically void
  if (out.size() >= 3) {
    const Link before = out[out.size() - 2];
    if (before.position == -1 && before.point == out.back().point) out.erase(out.end() - 2);
  }
  return PathList(w.rank(), std::move(out));
}

PathList reduce_path(const PathList& path) {
  return syntactic_to_path(free_reduce(path_to_syntactic(path)));
}

std::vector<PathList> split_gbase(std::span<const Link> serialized, int n) {
  if (n < 1) throw AmbientMismatch("g-base needs n >= 1");
  if (serialized.empty() || serialized.front() != Link::base()) {
    throw ParseError("serialized g-base must start with (-1,0)");
  }
  if (serialized.size() < 2 || serialized.back() != Link::base()) {
    throw ParseError("serialized g-base must end with the (-1,0) separator");
  }
  std::vector<PathList> paths;
  std::vector<Link> current;
  for (std::size_t i = 0; i + 1 < serialized.size(); ++i) {
    const Link l = serialized[i];
    if (l.is_base() && !current.empty()) {
      paths.emplace_back(n, std::move(current));
      current.clear();
    }
    current.push_back(l);
    if (l.is_base() && serialized[i + 1].is_base()) {
      throw ParseError("empty path at link " + std::to_string(i));
    }
  }
  paths.emplace_back(n, std::move(current));
  if (static_cast<int>(paths.size()) != n) {
    throw ParseError("serialized g-base holds " + std::to_string(paths.size()) +
                     " paths, expected " + std::to_string(n));
  }
  return paths;
}

std::vector<Link> join_gbase(std::span<const PathList> paths) {
  std::size_t total = 1;
  for (const auto& p : paths) total += p.size();
  std::vector<Link> out;
  out.reserve(total);
  for (const auto& p : paths) out.insert(out.end(), p.links().begin(), p.links().end());
  out.push_back(Link::base());
  return out;
}

namespace {

class LinkScanner {
 public:
  explicit LinkScanner(std::string_view text) : text_(text) {}

  std::vector<Link> run() {
    std::vector<Link> out;
    skip_ws();
    while (pos_ < text_.size()) {
      const std::size_t at = out.size();
      expect('(');
      const int point = integer();
      expect(',');
      const int position = integer();
      expect(')');
      if (position < -1 || position > 1) {
        fail("link " + std::to_string(at) + " has position " + std::to_string(position));
      }
      if (point == 0 || point < -1) {
        fail("link " + std::to_string(at) + " has point " + std::to_string(point));
      }
      if (point == -1 && position != 0) {
        fail("link " + std::to_string(at) + ": the base point is only written (-1,0)");
      }
      out.push_back({point, position});
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        skip_ws();
        if (pos_ == text_.size()) fail("dangling comma");
      }
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    }
    ++pos_;
  }

  int integer() {
    skip_ws();
    int value = 0;
    const char* begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin) {
      fail("expected an integer at offset " + std::to_string(pos_));
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Link> parse_links(std::string_view text) { return LinkScanner(text).run(); }

std::string format_links(std::span<const Link> links) {
  std::string out;
  out.reserve(links.size() * 7);
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i) out += ',';
    out += '(';
    out += std::to_string(links[i].point);
    out += ',';
    out += std::to_string(links[i].position);
    out += ')';
  }
  return out;
}

PathList parse_path(std::string_view text, int punctures) {
  auto links = parse_links(text);
  if (links.size() >= 2 && links.back().is_base()) links.pop_back();
  return PathList(punctures, std::move(links));
}

std::string format_path(const PathList& path, bool terminated) {
  std::string out = format_links(path.links());
  if (terminated) out += out.empty() ? "(-1,0)" : ",(-1,0)";
  return out;
}

GBase parse_gbase(std::string_view text, int n) {
  return GBase(split_gbase(parse_links(text), n));
}

std::string format_gbase(const GBase& g) { return format_links(join_gbase(g.paths())); }

}  // namespace braidwp
