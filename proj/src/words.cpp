#include "simplexflows/words.hpp"

#include <sstream>

namespace simplexflows {
namespace {

// Tokenizes "g1 g2^-1 ..." style words; returns (name, index, power) triples.
struct Token {
  std::string name;
  int index = 0;
  int power = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::istringstream in(text);
  std::string piece;
  while (in >> piece) {
    Token tok;
    size_t caret = piece.find('^');
    std::string head = piece.substr(0, caret);
    if (caret != std::string::npos) {
      tok.power = std::stoi(piece.substr(caret + 1));
      if (tok.power != 1 && tok.power != -1)
        throw DomainError("word parse: only powers +1 and -1 are accepted");
    }
    if (head.empty()) throw DomainError("word parse: empty generator");
    tok.name = head.substr(0, 1);
    if (head.size() > 1) tok.index = std::stoi(head.substr(1));
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

// ---------------------------------------------------------------------------
// FreeWord
// ---------------------------------------------------------------------------

FreeWord FreeWord::generator(int index, int power) {
  if (index < 1 || index > 3 || (power != 1 && power != -1))
    throw DomainError("FreeWord: generator must be a1..a3 with power +-1");
  FreeWord w;
  w.letters_.push_back({index, power});
  return w;
}

FreeWord FreeWord::parse(const std::string& text) {
  FreeWord w;
  for (const Token& tok : tokenize(text)) {
    if (tok.name != "a") throw DomainError("FreeWord: expected a1, a2 or a3");
    w.push_reduced({tok.index, tok.power});
  }
  return w;
}

void FreeWord::push_reduced(const Letter& letter) {
  if (!letters_.empty() && letters_.back().index == letter.index &&
      letters_.back().power == -letter.power) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->index, -it->power});
  return out;
}

FreeWord FreeWord::concat(const FreeWord& right) const {
  FreeWord out = *this;
  for (const Letter& l : right.letters_) out.push_reduced(l);
  return out;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << 'a' << letters_[i].index;
    if (letters_[i].power < 0) out << "^-1";
  }
  return out.str();
}

std::array<int64_t, 3> FreeWord::exponents() const {
  std::array<int64_t, 3> e{0, 0, 0};
  for (const Letter& l : letters_) e[l.index - 1] += l.power;
  return e;
}

// ---------------------------------------------------------------------------
// GroupWord
// ---------------------------------------------------------------------------

GroupWord GroupWord::parse(const std::string& text) {
  const auto tokens = tokenize(text);
  GroupWord w;
  bool alphabet_known = false;
  for (const Token& tok : tokens) {
    int index;
    WordAlphabet alphabet;
    if (tok.name == "y") {
      alphabet = WordAlphabet::Y;
      index = tok.index;
    } else if (tok.name == "X" || tok.name == "R" || tok.name == "S") {
      alphabet = WordAlphabet::XRS;
      index = tok.name == "X" ? 1 : tok.name == "R" ? 2 : 3;
    } else {
      throw DomainError("GroupWord: expected y1..y3 or X, R, S");
    }
    if (!alphabet_known) {
      w.alphabet_ = alphabet;
      alphabet_known = true;
    } else if (w.alphabet_ != alphabet) {
      throw DomainError("GroupWord: mixed alphabets");
    }
    if (index < 1 || index > 3) throw DomainError("GroupWord: index out of range");
    w.append(index, tok.power);
  }
  return w;
}

GroupWord& GroupWord::append(int index, int power) {
  if (!letters_.empty() && letters_.back().index == index &&
      letters_.back().power == -power) {
    letters_.pop_back();
  } else {
    letters_.push_back({index, power});
  }
  return *this;
}

GroupWord GroupWord::concat(const GroupWord& right) const {
  if (!letters_.empty() && !right.letters_.empty() && alphabet_ != right.alphabet_)
    throw DomainError("GroupWord: mixed alphabets");
  GroupWord out = *this;
  if (out.letters_.empty()) out.alphabet_ = right.alphabet_;
  for (const Letter& l : right.letters_) out.append(l.index, l.power);
  return out;
}

GroupWord GroupWord::inverse() const {
  GroupWord out(alphabet_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.append(it->index, -it->power);
  return out;
}

GroupWord GroupWord::pow(int exponent) const {
  GroupWord base = exponent < 0 ? inverse() : *this;
  GroupWord out(alphabet_);
  for (int k = 0; k < std::abs(exponent); ++k) out = out.concat(base);
  return out;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  static const char* xrs[] = {"X", "R", "S"};
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    if (alphabet_ == WordAlphabet::Y) out << 'y' << letters_[i].index;
    else out << xrs[letters_[i].index - 1];
    if (letters_[i].power < 0) out << "^-1";
  }
  return out.str();
}

std::array<int64_t, 3> GroupWord::exponents() const {
  std::array<int64_t, 3> e{0, 0, 0};
  for (const Letter& l : letters_) e[l.index - 1] += l.power;
  return e;
}

// ---------------------------------------------------------------------------
// FreeAutomorphism
// ---------------------------------------------------------------------------

FreeAutomorphism::FreeAutomorphism()
    : images_{FreeWord::generator(1), FreeWord::generator(2), FreeWord::generator(3)} {}

FreeAutomorphism::FreeAutomorphism(std::array<FreeWord, 3> images)
    : images_(std::move(images)) {}

FreeAutomorphism FreeAutomorphism::inner(const FreeWord& w) {
  const FreeWord winv = w.inverse();
  std::array<FreeWord, 3> images;
  for (int i = 1; i <= 3; ++i)
    images[i - 1] = w.concat(FreeWord::generator(i)).concat(winv);
  return FreeAutomorphism(std::move(images));
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (const Letter& l : w.letters()) {
    const FreeWord& img = images_[l.index - 1];
    out = out.concat(l.power > 0 ? img : img.inverse());
  }
  return out;
}

FreeAutomorphism FreeAutomorphism::compose(const FreeAutomorphism& inner) const {
  std::array<FreeWord, 3> images;
  for (int i = 1; i <= 3; ++i) images[i - 1] = apply(inner.image(i));
  return FreeAutomorphism(std::move(images));
}

bool FreeAutomorphism::is_identity() const {
  return *this == FreeAutomorphism();
}

// ---------------------------------------------------------------------------
// PermutationS4
// ---------------------------------------------------------------------------

PermutationS4::PermutationS4() : images_{0, 1, 2, 3} {}

PermutationS4::PermutationS4(std::array<int, 4> images) : images_(images) {}

PermutationS4 PermutationS4::transposition(int a, int b) {
  PermutationS4 p;
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

PermutationS4 PermutationS4::compose(const PermutationS4& inner) const {
  std::array<int, 4> out{};
  for (int x = 0; x < 4; ++x) out[x] = images_[inner.images_[x]];
  return PermutationS4(out);
}

PermutationS4 PermutationS4::inverse() const {
  std::array<int, 4> out{};
  for (int x = 0; x < 4; ++x) out[images_[x]] = x;
  return PermutationS4(out);
}

bool PermutationS4::is_identity() const { return *this == PermutationS4(); }

std::string PermutationS4::cycle_str() const {
  std::string out;
  std::array<bool, 4> seen{};
  for (int start = 0; start < 4; ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace simplexflows
