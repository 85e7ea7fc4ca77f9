#include "braidwp/free_word.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "braidwp/error.hpp"

namespace braidwp {

namespace {

void check_letter(int rank, FGLetter l) {
  if (l.signed_value() == 0 || l.index() > rank) {
    throw AmbientMismatch("generator index " + std::to_string(l.index()) +
                          " outside 1.." + std::to_string(rank));
  }
}

// Appends l to a reduced stack, cancelling against the top.
inline void push_reducing(std::vector<FGLetter>& stack, FGLetter l) {
  if (!stack.empty() && stack.back().cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

FGWord::FGWord(int rank) : rank_(rank) {
  if (rank < 1) throw AmbientMismatch("free group rank must be positive");
}

FGWord::FGWord(int rank, std::vector<FGLetter> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (rank < 1) throw AmbientMismatch("free group rank must be positive");
  for (auto l : letters_) check_letter(rank_, l);
}

FGWord::FGWord(int rank, std::initializer_list<int> signed_letters) : FGWord(rank) {
  letters_.reserve(signed_letters.size());
  for (int v : signed_letters) push_back(FGLetter::from_signed(v));
}

FGWord FGWord::generator(int rank, int index, int sign) {
  FGWord w(rank);
  w.push_back(FGLetter(index, sign));
  return w;
}

void FGWord::push_back(FGLetter l) {
  check_letter(rank_, l);
  letters_.push_back(l);
}

FGWord free_reduce(const FGWord& w) {
  std::vector<FGLetter> stack;
  stack.reserve(w.size());
  for (auto l : w.letters()) push_reducing(stack, l);
  return FGWord(w.rank(), std::move(stack));
}

bool is_reduced(const FGWord& w) {
  auto ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i - 1].cancels(ls[i])) return false;
  }
  return true;
}

FGWord invert(const FGWord& w) {
  std::vector<FGLetter> out;
  out.reserve(w.size());
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverse());
  return FGWord(w.rank(), std::move(out));
}

FGWord concat(const FGWord& a, const FGWord& b) {
  if (a.rank() != b.rank()) {
    throw AmbientMismatch("concat of words over " + std::to_string(a.rank()) +
                          " and " + std::to_string(b.rank()) + " generators");
  }
  std::vector<FGLetter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return FGWord(a.rank(), std::move(out));
}

FGWord substitute(const FGWord& w, std::span<const FGWord> images) {
  if (images.empty()) throw AmbientMismatch("substitute needs at least one image");
  const int rank = images.front().rank();
  for (const auto& img : images) {
    if (img.rank() != rank) throw AmbientMismatch("substitution images disagree on rank");
  }
  std::vector<FGLetter> stack;
  for (auto l : w.letters()) {
    if (static_cast<std::size_t>(l.index()) > images.size()) {
      throw AmbientMismatch("letter gamma_" + std::to_string(l.index()) + " has no image");
    }
    auto img = images[l.index() - 1].letters();
    if (l.sign() > 0) {
      for (auto x : img) push_reducing(stack, x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reducing(stack, it->inverse());
    }
  }
  return FGWord(rank, std::move(stack));
}

std::optional<ConjugateShape> conjugate_shape(const FGWord& w) {
  const auto ls = w.letters();
  if (ls.size() % 2 == 0) return std::nullopt;
  const std::size_t k = ls.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    if (!ls[i].cancels(ls[ls.size() - 1 - i])) return std::nullopt;
  }
  return ConjugateShape{
      FGWord(w.rank(), std::vector<FGLetter>(ls.begin() + k + 1, ls.end())), ls[k]};
}

FGWord parse_word(std::string_view text, int rank) {
  FGWord w(rank);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
        (tok.front() == '+' && digits.front() == '-')) {
      throw ParseError("malformed word token '" + std::string(tok) + "'");
    }
    if (value == 0) throw ParseError("word token 0 names no generator");
    w.push_back(FGLetter::from_signed(value));
    pos = end;
  }
  return w;
}

std::string format_word(const FGWord& w) {
  std::string out;
  for (auto l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.sign() > 0 ? '+' : '-';
    out += std::to_string(l.index());
  }
  return out;
}

}  // namespace braidwp
