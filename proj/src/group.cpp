#include "simplexflows/group.hpp"

#include <map>
#include <set>
#include <sstream>

namespace simplexflows {
namespace {

GroupWord y_word(std::initializer_list<std::pair<int, int>> letters) {
  GroupWord w(WordAlphabet::Y);
  for (const auto& [index, power] : letters) w.append(index, power);
  return w;
}

std::string instance_name(const std::string& base,
                          std::initializer_list<int> indices) {
  std::ostringstream out;
  out << base << '(';
  bool first = true;
  for (int i : indices) {
    if (!first) out << ',';
    out << i;
    first = false;
  }
  out << ')';
  return out.str();
}

void check_word_pair(VerificationReport& report, const std::string& name,
                     const GroupWord& lhs, const GroupWord& rhs) {
  const bool aut_equal = automorphism_of_word(lhs) == automorphism_of_word(rhs);
  const bool perm_equal = permutation_of_word(lhs) == permutation_of_word(rhs);
  report.items.push_back(
      {name, aut_equal && perm_equal,
       std::string(aut_equal ? "aut ok" : "aut FAIL") + ", " +
           (perm_equal ? "perm ok" : "perm FAIL")});
}

}  // namespace

FreeWord apply_generator(int index, int power, const FreeWord& w) {
  if (index < 1 || index > 3 || (power != 1 && power != -1))
    throw DomainError("apply_generator: need y1..y3 with power +-1");
  const FreeWord ai = FreeWord::generator(index);
  FreeWord out;
  for (const Letter& l : w.letters()) {
    FreeWord image;
    if (l.index == index) {
      image = ai;
    } else if (power > 0) {
      image = ai.concat(FreeWord::generator(l.index, -1));  // a_j -> a_i a_j^-1
    } else {
      image = FreeWord::generator(l.index, -1).concat(ai);  // a_j -> a_j^-1 a_i
    }
    out = out.concat(l.power > 0 ? image : image.inverse());
  }
  return out;
}

FreeWord apply_word(const GroupWord& word, const FreeWord& w) {
  if (!word.empty() && word.alphabet() != WordAlphabet::Y)
    throw DomainError("apply_word: y-alphabet words only");
  FreeWord out = w;
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out = apply_generator(it->index, it->power, out);
  return out;
}

FreeAutomorphism automorphism_of_word(const GroupWord& word) {
  const GroupWord y =
      word.alphabet() == WordAlphabet::Y ? word : translate_to_y(word);
  std::array<FreeWord, 3> images;
  for (int i = 1; i <= 3; ++i) images[i - 1] = apply_word(y, FreeWord::generator(i));
  return FreeAutomorphism(std::move(images));
}

PermutationS4 permutation_of_word(const GroupWord& word) {
  const GroupWord y =
      word.alphabet() == WordAlphabet::Y ? word : translate_to_y(word);
  PermutationS4 out;
  const auto& letters = y.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out = PermutationS4::transposition(0, it->index).compose(out);
  return out;
}

GroupWord translate_to_y(const GroupWord& xrs_word) {
  if (!xrs_word.empty() && xrs_word.alphabet() != WordAlphabet::XRS)
    throw DomainError("translate_to_y: expected an X,R,S word");
  // X = y3^-1 y1 y3^-1,  R = y2^-1 y3 y1^-1 y2,  S = y3^-1 y2.
  static const GroupWord x = y_word({{3, -1}, {1, 1}, {3, -1}});
  static const GroupWord r = y_word({{2, -1}, {3, 1}, {1, -1}, {2, 1}});
  static const GroupWord s = y_word({{3, -1}, {2, 1}});
  GroupWord out(WordAlphabet::Y);
  for (const Letter& l : xrs_word.letters()) {
    const GroupWord& image = l.index == 1 ? x : l.index == 2 ? r : s;
    out = out.concat(l.power > 0 ? image : image.inverse());
  }
  return out;
}

GroupWord translate_to_xrs(const GroupWord& y) {
  if (!y.empty() && y.alphabet() != WordAlphabet::Y)
    throw DomainError("translate_to_xrs: expected a y word");
  const auto xrs_word = [](const char* text) { return GroupWord::parse(text); };
  // y1 = R^-1 X^-1 S R^-1 S^-1 R,  y2 = R X^-1 S R^-1 S^-1 R^-1,
  // y3 = X^-1 S R^-1 S^-1.
  static const GroupWord y1 = xrs_word("R^-1 X^-1 S R^-1 S^-1 R");
  static const GroupWord y2 = xrs_word("R X^-1 S R^-1 S^-1 R^-1");
  static const GroupWord y3 = xrs_word("X^-1 S R^-1 S^-1");
  GroupWord out(WordAlphabet::XRS);
  for (const Letter& l : y.letters()) {
    const GroupWord& image = l.index == 1 ? y1 : l.index == 2 ? y2 : y3;
    out = out.concat(l.power > 0 ? image : image.inverse());
  }
  return out;
}

GroupWord central_rotation() {
  return y_word({{1, 1}, {2, -1}}).pow(3);
}

VerificationReport verify_y_relations() {
  VerificationReport report;
  // (i): (y_j y_i^-1)^3 = (y_k y_l^-1)^3 whenever neither side is trivial.
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i) {
      if (i == j) continue;
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          if (k == l) continue;
          const GroupWord lhs = y_word({{j, 1}, {i, -1}}).pow(3);
          const GroupWord rhs = y_word({{k, 1}, {l, -1}}).pow(3);
          check_word_pair(report, instance_name("relation-i", {j, i, k, l}), lhs, rhs);
        }
    }
  // (ii): y_i y_j^-1 y_i = y_j^-1 y_i y_j^-1.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const GroupWord lhs = y_word({{i, 1}, {j, -1}, {i, 1}});
      const GroupWord rhs = y_word({{j, -1}, {i, 1}, {j, -1}});
      check_word_pair(report, instance_name("relation-ii", {i, j}), lhs, rhs);
    }
  // (iii): y_k y_j^-1 y_i y_j^-1 y_k = y_j^-1 y_i y_j^-1.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        if (i == j || j == k || i == k) continue;
        const GroupWord lhs = y_word({{k, 1}, {j, -1}, {i, 1}, {j, -1}, {k, 1}});
        const GroupWord rhs = y_word({{j, -1}, {i, 1}, {j, -1}});
        check_word_pair(report, instance_name("relation-iii", {i, j, k}), lhs, rhs);
      }
  return report;
}

VerificationReport verify_translation_identities() {
  VerificationReport report;
  for (int i = 1; i <= 3; ++i) {
    const GroupWord yi = y_word({{i, 1}});
    const GroupWord round_trip = translate_to_y(translate_to_xrs(yi));
    check_word_pair(report, instance_name("roundtrip-y", {i}), yi, round_trip);
  }
  static const char* xrs_names[] = {"X", "R", "S"};
  for (int i = 1; i <= 3; ++i) {
    GroupWord g(WordAlphabet::XRS);
    g.append(i, 1);
    const GroupWord round_trip = translate_to_xrs(translate_to_y(g));
    const bool aut_equal =
        automorphism_of_word(g) == automorphism_of_word(round_trip);
    const bool perm_equal =
        permutation_of_word(g) == permutation_of_word(round_trip);
    report.items.push_back({std::string("roundtrip-") + xrs_names[i - 1],
                            aut_equal && perm_equal, ""});
  }
  // X^2 = R^3 = S^3 = (SR)^3 and X R = R^-1 X, checked through the
  // translation into the y presentation.
  const GroupWord x = GroupWord::parse("X");
  const GroupWord r = GroupWord::parse("R");
  const GroupWord s = GroupWord::parse("S");
  const GroupWord x2 = x.pow(2), r3 = r.pow(3), s3 = s.pow(3);
  const GroupWord sr3 = s.concat(r).pow(3);
  check_word_pair(report, "X^2=R^3", translate_to_y(x2), translate_to_y(r3));
  check_word_pair(report, "R^3=S^3", translate_to_y(r3), translate_to_y(s3));
  check_word_pair(report, "S^3=(SR)^3", translate_to_y(s3), translate_to_y(sr3));
  check_word_pair(report, "XR=R^-1X", translate_to_y(x.concat(r)),
                  translate_to_y(r.inverse().concat(x)));
  return report;
}

VerificationReport verify_pure_subgroup() {
  VerificationReport report;
  // y_i^2 acts as conjugation by a_i.
  for (int i = 1; i <= 3; ++i) {
    const GroupWord yi2 = y_word({{i, 1}}).pow(2);
    const bool ok = automorphism_of_word(yi2) ==
                    FreeAutomorphism::inner(FreeWord::generator(i));
    const bool perm_ok = permutation_of_word(yi2).is_identity();
    report.items.push_back(
        {instance_name("square-is-conjugation", {i}), ok && perm_ok, ""});
  }
  // The full rotation (y_i y_j^-1)^3 acts trivially, for every i != j, and
  // so does its square.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const GroupWord tau = y_word({{i, 1}, {j, -1}}).pow(3);
      const bool ok = automorphism_of_word(tau).is_identity() &&
                      permutation_of_word(tau).is_identity();
      report.items.push_back({instance_name("rotation-trivial", {i, j}), ok, ""});
    }
  const GroupWord tau = central_rotation();
  report.items.push_back({"rotation-squared-trivial",
                          automorphism_of_word(tau.pow(2)).is_identity() &&
                              permutation_of_word(tau.pow(2)).is_identity(),
                          ""});
  // Centrality of the rotation against the generators.
  bool central = true;
  for (int i = 1; i <= 3; ++i) {
    const GroupWord yi = y_word({{i, 1}});
    central = central && automorphism_of_word(tau.concat(yi)) ==
                             automorphism_of_word(yi.concat(tau));
  }
  report.items.push_back({"rotation-central", central, ""});

  // The image in S4 of the three generators has order 24.
  std::set<PermutationS4> closure;
  std::vector<PermutationS4> frontier{PermutationS4()};
  closure.insert(PermutationS4());
  const std::array<PermutationS4, 3> gens{PermutationS4::transposition(0, 1),
                                          PermutationS4::transposition(0, 2),
                                          PermutationS4::transposition(0, 3)};
  while (!frontier.empty()) {
    std::vector<PermutationS4> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        const PermutationS4 q = g.compose(p);
        if (closure.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  report.items.push_back({"image-order-24", closure.size() == 24,
                          "order " + std::to_string(closure.size())});

  // Abelianization exponent counts behind the independence observations: in
  // the subgroup on two generators, family (i) gives (6, -6) and family (ii)
  // gives (1, 1).
  {
    const GroupWord lhs = y_word({{1, 1}, {2, -1}}).pow(3);
    const GroupWord rhs = y_word({{2, 1}, {1, -1}}).pow(3);
    const GroupWord relator = lhs.concat(rhs.inverse());
    const auto e = relator.exponents();
    report.items.push_back(
        {"abelianized-relator-i", e[0] == 6 && e[1] == -6 && e[2] == 0, ""});
  }
  {
    const GroupWord lhs = y_word({{1, 1}, {2, -1}, {1, 1}});
    const GroupWord rhs = y_word({{2, -1}, {1, 1}, {2, -1}});
    const GroupWord relator = lhs.concat(rhs.inverse());
    const auto e = relator.exponents();
    report.items.push_back(
        {"abelianized-relator-ii", e[0] == 1 && e[1] == 1 && e[2] == 0, ""});
  }
  return report;
}

VerificationReport verify_group_suite() {
  VerificationReport report;
  for (auto* part : {&verify_y_relations, &verify_translation_identities,
                     &verify_pure_subgroup}) {
    VerificationReport sub = (*part)();
    report.items.insert(report.items.end(), sub.items.begin(), sub.items.end());
  }
  // The literal generator action from the figure: y1 sends a2 to a1 a2^-1.
  const FreeWord image = apply_generator(1, 1, FreeWord::generator(2));
  report.items.push_back(
      {"action-y1-a2", image == FreeWord::parse("a1 a2^-1"), image.str()});
  return report;
}

}  // namespace simplexflows
