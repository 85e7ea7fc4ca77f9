#include "braidwp/braid.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "braidwp/error.hpp"

namespace braidwp {

namespace {

void check_letter(int strands, BraidLetter l) {
  if (l.signed_value() == 0 || l.index() >= strands) {
    throw AmbientMismatch("braid letter " + std::to_string(l.signed_value()) +
                          " outside sigma_1..sigma_" + std::to_string(strands - 1));
  }
}

class ReducingBuilder {
 public:
  explicit ReducingBuilder(std::size_t hint) { stack_.reserve(hint); }

  void append(const FGWord& w) {
    for (auto l : w.letters()) push(l);
  }
  void append_inverse(const FGWord& w) {
    auto ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(it->inverse());
  }
  FGWord finish(int rank) { return FGWord(rank, std::move(stack_)); }

 private:
  void push(FGLetter l) {
    if (!stack_.empty() && stack_.back().cancels(l)) {
      stack_.pop_back();
    } else {
      stack_.push_back(l);
    }
  }
  std::vector<FGLetter> stack_;
};

// reduce(by * x * by^{-1})
FGWord conjugate(const FGWord& x, const FGWord& by) {
  ReducingBuilder b(x.size() + 2 * by.size());
  b.append(by);
  b.append(x);
  b.append_inverse(by);
  return b.finish(x.rank());
}

// reduce(by^{-1} * x * by)
FGWord conjugate_inverse(const FGWord& x, const FGWord& by) {
  ReducingBuilder b(x.size() + 2 * by.size());
  b.append_inverse(by);
  b.append(x);
  b.append(by);
  return b.finish(x.rank());
}

// Only the two touched elements are reduced; the others are already reduced.
void apply_move(std::vector<FGWord>& e, int index, int sign) {
  FGWord& a = e[index - 1];
  FGWord& b = e[index];
  if (sign > 0) {
    FGWord moved = conjugate(a, b);
    a = std::move(b);
    b = std::move(moved);
  } else {
    FGWord moved = conjugate_inverse(b, a);
    b = std::move(a);
    a = std::move(moved);
  }
}

std::vector<FGWord> standard_words(int n) {
  std::vector<FGWord> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(FGWord::generator(n, i));
  return out;
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw AmbientMismatch("a braid word needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : BraidWord(strands) {
  for (auto l : letters) check_letter(strands_, l);
  letters_ = std::move(letters);
}

BraidWord::BraidWord(int strands, std::initializer_list<int> signed_letters)
    : BraidWord(strands) {
  for (int v : signed_letters) push_back(BraidLetter::from_signed(v));
}

void BraidWord::push_back(BraidLetter l) {
  check_letter(strands_, l);
  letters_.push_back(l);
}

BraidWord inverse(const BraidWord& w) {
  std::vector<BraidLetter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l = l.inverse();
  return BraidWord(w.strands(), std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw AmbientMismatch("concat of braids on " + std::to_string(a.strands()) + " and " +
                          std::to_string(b.strands()) + " strands");
  }
  std::vector<BraidLetter> out(a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(out));
}

BraidWord cancel_inverse_pairs(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (auto l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord parse_braid(std::string_view text, int strands) {
  BraidWord w(strands);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    std::string_view digits = tok.front() == '+' ? tok.substr(1) : tok;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
        (tok.front() == '+' && digits.front() == '-')) {
      throw ParseError("malformed braid token '" + std::string(tok) + "'");
    }
    if (value == 0) throw ParseError("braid token 0 names no generator");
    w.push_back(BraidLetter::from_signed(value));
    pos = end;
  }
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::string out;
  for (auto l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.signed_value());
  }
  return out;
}

SyntacticGBase::SyntacticGBase(std::vector<FGWord> elements) : elements_(std::move(elements)) {
  const int n = static_cast<int>(elements_.size());
  if (n < 1) throw AmbientMismatch("a g-base needs at least one element");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    if (e.rank() != n) {
      throw AmbientMismatch("element " + std::to_string(i + 1) + " is over rank " +
                            std::to_string(e.rank()) + ", expected " + std::to_string(n));
    }
    auto shape = conjugate_shape(e);
    if (!shape) throw ShapeError("element " + std::to_string(i + 1) + " is not a conjugate");
    if (!is_reduced(e)) throw ShapeError("element " + std::to_string(i + 1) + " is not reduced");
    const int core = shape->core.index();
    if (seen[core]) throw ShapeError("core generator " + std::to_string(core) + " repeated");
    seen[core] = true;
  }
}

SyntacticGBase SyntacticGBase::standard(int n) { return SyntacticGBase(standard_words(n)); }

std::vector<int> SyntacticGBase::core_indices() const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e[e.size() / 2].index());
  return out;
}

std::size_t SyntacticGBase::total_length() const {
  std::size_t total = 0;
  for (const auto& e : elements_) total += e.size();
  return total;
}

std::string format_syntactic_gbase(const SyntacticGBase& g) {
  std::string out;
  for (const auto& e : g.elements()) {
    out += format_word(e);
    out += '\n';
  }
  return out;
}

SyntacticGBase braid_move(const SyntacticGBase& g, int index, int sign) {
  if (index < 1 || index >= g.rank()) {
    throw AmbientMismatch("braid move " + std::to_string(index) + " outside 1.." +
                          std::to_string(g.rank() - 1));
  }
  std::vector<FGWord> e(g.elements().begin(), g.elements().end());
  apply_move(e, index, sign);
  return SyntacticGBase(std::move(e));
}

SyntacticGBase process_word_syntactic(const BraidWord& w, ProcessOptions opts) {
  const BraidWord work = opts.pre_cancel ? cancel_inverse_pairs(w) : w;
  std::vector<FGWord> e = standard_words(work.strands());
  const auto ls = work.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) apply_move(e, it->index(), it->sign());
  return SyntacticGBase(std::move(e));
}

GBase process_word_geometric(const BraidWord& w, ProcessOptions opts) {
  const BraidWord work = opts.pre_cancel ? cancel_inverse_pairs(w) : w;
  const int n = work.strands();
  GBase start = standard_gbase(n);
  std::vector<PathList> paths(start.paths().begin(), start.paths().end());
  const auto ls = work.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const int i = it->index();
    const FGWord a = path_to_syntactic(paths[i - 1]);
    const FGWord b = path_to_syntactic(paths[i]);
    if (it->sign() > 0) {
      paths[i - 1] = std::move(paths[i]);
      paths[i] = syntactic_to_path(conjugate(a, b));
    } else {
      paths[i] = std::move(paths[i - 1]);
      paths[i - 1] = syntactic_to_path(conjugate_inverse(b, a));
    }
  }
  return GBase(std::move(paths));
}

SyntacticGBase to_syntactic(const GBase& g) {
  std::vector<FGWord> e;
  e.reserve(g.paths().size());
  for (const auto& p : g.paths()) e.push_back(path_to_syntactic(p));
  return SyntacticGBase(std::move(e));
}

GBase to_geometric(const SyntacticGBase& g) {
  std::vector<PathList> paths;
  paths.reserve(g.elements().size());
  for (const auto& e : g.elements()) paths.push_back(syntactic_to_path(e));
  return GBase(std::move(paths));
}

GBase multiply(const GBase& lhs, const GBase& rhs) {
  if (lhs.punctures() != rhs.punctures()) {
    throw AmbientMismatch("multiply of g-bases over " + std::to_string(lhs.punctures()) +
                          " and " + std::to_string(rhs.punctures()) + " punctures");
  }
  const auto n = static_cast<std::size_t>(lhs.punctures());
  std::vector<FGWord> w1, w2;
  w1.reserve(n);
  w2.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    w1.push_back(path_to_syntactic(lhs[i]));
    w2.push_back(path_to_syntactic(rhs[i]));
  }
  std::vector<PathList> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(syntactic_to_path(substitute(w1[i], w2)));
  return GBase(std::move(out));
}

bool words_equal(const BraidWord& a, const BraidWord& b, EqualityOptions opts) {
  if (a.strands() != b.strands()) {
    throw AmbientMismatch("comparing braids on " + std::to_string(a.strands()) + " and " +
                          std::to_string(b.strands()) + " strands");
  }
  const ProcessOptions p{opts.pre_cancel};
  if (opts.pipeline == Pipeline::geometric) {
    return process_word_geometric(a, p) == process_word_geometric(b, p);
  }
  return process_word_syntactic(a, p) == process_word_syntactic(b, p);
}

}  // namespace braidwp
