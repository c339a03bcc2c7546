#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;
using namespace testutil;

TEST_CASE("validate_coxeter_target") {
  auto a2 = make_space(kA2);
  CoxeterWord cw = coxeter_word(a2->diagram(), {1, 2});
  Factorization ok(*a2, {a2->simple(1), a2->simple(2)});
  CHECK_NOTHROW(validate_coxeter_target(*a2, cw, ok));

  Factorization odd(*a2, {a2->simple(1), a2->simple(2), a2->simple(1)});
  try {
    validate_coxeter_target(*a2, cw, odd);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParityError);
  }

  Factorization swapped(*a2, {a2->simple(2), a2->simple(1)});
  try {
    validate_coxeter_target(*a2, cw, swapped);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProductMismatch);
  }
}

TEST_CASE("decide") {
  auto b2 = make_space(kB2);
  ClassLabeling lb = odd_components(b2->diagram());
  Factorization f(*b2, {b2->simple(1), b2->simple(2), b2->simple(2), b2->simple(2)});
  Factorization g(*b2, {b2->simple(1), b2->simple(1), b2->simple(1), b2->simple(2)});
  Decision d = decide(f, g, lb);
  CHECK_FALSE(d.equivalent);
  CHECK(d.certificate_f.counts == std::map<int, int>{{1, 1}, {2, 3}});
  CHECK(d.certificate_g.counts == std::map<int, int>{{1, 3}, {2, 1}});
  CHECK_FALSE(d.witness.has_value());

  CHECK(decide(f, f, lb).equivalent);

  auto a2 = make_space(kA2);
  ClassLabeling la = odd_components(a2->diagram());
  Factorization fa(*a2, {a2->simple(1), a2->simple(2), a2->simple(1), a2->simple(1)});
  Factorization ga(*a2, {a2->simple(2), a2->reflection_of_word({1, 2, 1}),
                         a2->simple(2), a2->simple(2)});
  CHECK(decide(fa, ga, la).equivalent);  // single class

  Factorization shorter(*a2, {a2->simple(1), a2->simple(2)});
  CHECK_THROWS_AS((void)decide(fa, shorter, la), Error);
}

TEST_CASE("conjugate_pair_by_prefix_entry") {
  auto a2 = make_space(kA2);
  Reflection t212 = a2->reflection_of_word({2, 1, 2});
  Factorization f(*a2, {a2->simple(1), a2->simple(2), a2->simple(1), a2->simple(1)});

  auto [out, braid] = conjugate_pair_by_prefix_entry(f, 3, 2);
  CHECK(out.factor(1) == a2->simple(1));
  CHECK(out.factor(2) == a2->simple(2));
  CHECK(out.factor(3) == t212);
  CHECK(out.factor(4) == t212);
  CHECK(replay(f, braid) == out);

  // conjugating by an equal reflection is a no-op on the pair value
  Factorization g(*a2, {a2->simple(1), a2->simple(2), a2->simple(1), a2->simple(1)});
  auto [same, braid2] = conjugate_pair_by_prefix_entry(g, 3, 1);
  CHECK(same.factor(3) == a2->simple(1));
  CHECK(replay(g, braid2) == same);

  CHECK_THROWS_AS((void)conjugate_pair_by_prefix_entry(f, 3, 3), Error);
  CHECK_THROWS_AS((void)conjugate_pair_by_prefix_entry(f, 3, 4), Error);
  CHECK_THROWS_AS((void)conjugate_pair_by_prefix_entry(f, 2, 1), Error);  // not a pair
}

TEST_CASE("conjugate_pair_by_prefix_entry restores factors across other pairs") {
  auto b2 = make_space(kB2);
  Reflection t121 = b2->reflection_of_word({1, 2, 1});
  // core (s1, s2), then pair (t121, t121), then pair (s2, s2)
  Factorization f(*b2, {b2->simple(1), b2->simple(2), t121, t121,
                        b2->simple(2), b2->simple(2)});
  // conjugate the LAST pair by prefix entry 1, crossing the middle pair
  auto [out, braid] = conjugate_pair_by_prefix_entry(f, 5, 1);
  Reflection expected = b2->conjugate_by_reflection(b2->simple(2), b2->simple(1));
  for (int p = 1; p <= 4; ++p) CHECK(out.factor(p) == f.factor(p));
  CHECK(out.factor(5) == expected);
  CHECK(out.factor(6) == expected);
  CHECK(replay(f, braid) == out);
}

TEST_CASE("conjugate_pair_by_word") {
  auto a2 = make_space(kA2);
  Factorization f(*a2, {a2->simple(1), a2->simple(2), a2->simple(1), a2->simple(1)});

  auto [unchanged, empty_braid] = conjugate_pair_by_word(f, 3, {});
  CHECK(unchanged == f);
  CHECK(empty_braid.empty());

  auto [single, b1] = conjugate_pair_by_word(f, 3, {2});
  CHECK(single.factor(3) == a2->reflection_of_word({2, 1, 2}));
  CHECK(replay(f, b1) == single);

  auto b2 = make_space(kB2);
  Factorization fb(*b2, {b2->simple(1), b2->simple(2), b2->simple(2), b2->simple(2)});
  auto [moved, braid] = conjugate_pair_by_word(fb, 3, {1, 2});
  Reflection expected =
      b2->conjugate(b2->simple(2), b2->element_of_word({1, 2}));
  CHECK(moved.factor(3) == expected);
  CHECK(moved.factor(4) == expected);
  CHECK(replay(fb, braid) == moved);

  // scrambled prefix is rejected
  Factorization bad(*b2, {b2->simple(2), b2->simple(2), b2->simple(1), b2->simple(1)});
  CHECK_THROWS_AS((void)conjugate_pair_by_word(bad, 3, {1}), Error);
}

TEST_CASE("class_representative_conjugator") {
  auto a2 = make_space(kA2);
  ClassLabeling la = odd_components(a2->diagram());

  // already the representative
  Word u0 = class_representative_conjugator(*a2, a2->simple(1), la);
  CHECK(a2->element_of_word(u0) * a2->matrix_of(a2->simple(1)) *
            a2->element_of_word(reversed(u0)) ==
        a2->matrix_of(a2->simple(1)));

  // s2 conjugates down to the representative s1 through the odd edge
  Word u1 = class_representative_conjugator(*a2, a2->simple(2), la);
  CHECK(a2->element_of_word(u1) * a2->matrix_of(a2->simple(1)) *
            a2->element_of_word(reversed(u1)) ==
        a2->matrix_of(a2->simple(2)));

  Reflection t121 = a2->reflection_of_word({1, 2, 1});
  Word u2 = class_representative_conjugator(*a2, t121, la);
  CHECK(a2->element_of_word(u2) * a2->matrix_of(a2->simple(1)) *
            a2->element_of_word(reversed(u2)) ==
        a2->matrix_of(t121));

  // longer odd path: I2(5)
  auto i25 = make_space(kI25);
  ClassLabeling l5 = odd_components(i25->diagram());
  Reflection deep = i25->reflection_of_word({2, 1, 2, 1, 2});
  Word u3 = class_representative_conjugator(*i25, deep, l5);
  CHECK(i25->element_of_word(u3) * i25->matrix_of(i25->simple(1)) *
            i25->element_of_word(reversed(u3)) ==
        i25->matrix_of(deep));
}

TEST_CASE("canonicalize") {
  auto a2 = make_space(kA2);
  ClassLabeling la = odd_components(a2->diagram());
  CoxeterWord cw = coxeter_word(a2->diagram(), {1, 2});
  Reflection t121 = a2->reflection_of_word({1, 2, 1});

  // already canonical: empty braid
  Factorization canon(*a2, {a2->simple(1), a2->simple(2), a2->simple(1), a2->simple(1)});
  auto [same, none] = canonicalize(canon, cw, la);
  CHECK(same == canon);
  CHECK(none.empty());

  Factorization f(*a2, {t121, t121, a2->simple(1), a2->simple(2)});
  auto [cf, bf] = canonicalize(f, cw, la);
  CHECK(cf == canon);
  CHECK(replay(f, bf) == cf);

  // B2: the pair [2,1,2] lies in the class of s1, so it canonicalizes to
  // the representative s1 (oracle-confirmed class structure)
  auto b2 = make_space(kB2);
  ClassLabeling lb = odd_components(b2->diagram());
  CoxeterWord cwb = coxeter_word(b2->diagram(), {1, 2});
  Reflection t212 = b2->reflection_of_word({2, 1, 2});
  Factorization g(*b2, {b2->simple(1), b2->simple(2), t212, t212});
  auto [cg, bg] = canonicalize(g, cwb, lb);
  Factorization expected(*b2, {b2->simple(1), b2->simple(2), b2->simple(1),
                               b2->simple(1)});
  CHECK(cg == expected);
  CHECK(replay(g, bg) == cg);

  // pairs sort by class id
  Factorization h(*b2, {b2->simple(1), b2->simple(2), b2->simple(2), b2->simple(2),
                        b2->simple(1), b2->simple(1)});
  auto [ch, bh] = canonicalize(h, cwb, lb);
  CHECK(ch.factor(3) == b2->simple(1));
  CHECK(ch.factor(4) == b2->simple(1));
  CHECK(ch.factor(5) == b2->simple(2));
  CHECK(ch.factor(6) == b2->simple(2));
  CHECK(replay(h, bh) == ch);
}

TEST_CASE("canonicalize is a normal form keyed by the class multiset") {
  std::mt19937_64 rng(67);
  auto b2 = make_space(kB2);
  ClassLabeling lb = odd_components(b2->diagram());
  CoxeterWord cw = coxeter_word(b2->diagram(), {1, 2});
  for (const std::vector<int>& pairs :
       std::initializer_list<std::vector<int>>{{1}, {2}, {1, 2}, {2, 2}}) {
    Factorization seed = canonical_factorization(*b2, pairs);
    auto [canon_seed, braid_seed] = canonicalize(seed, cw, lb);
    for (int trial = 0; trial < 6; ++trial) {
      Factorization f = random_walk(seed, rng, 12);
      auto [canon, braid] = canonicalize(f, cw, lb);
      CHECK(canon == canon_seed);
      CHECK(replay(f, braid) == canon);
    }
  }
}

TEST_CASE("connect") {
  auto a2 = make_space(kA2);
  ClassLabeling la = odd_components(a2->diagram());
  CoxeterWord cw = coxeter_word(a2->diagram(), {1, 2});
  Factorization f(*a2, {a2->simple(1), a2->simple(2), a2->simple(1), a2->simple(1)});
  Factorization g(*a2, {a2->simple(2), a2->reflection_of_word({1, 2, 1}),
                        a2->simple(2), a2->simple(2)});
  REQUIRE(f.target() == g.target());

  Decision d = connect(f, g, cw, la);
  REQUIRE(d.equivalent);
  REQUIRE(d.witness.has_value());
  CHECK(replay(f, *d.witness) == g);

  Decision self = connect(f, f, cw, la);
  REQUIRE(self.witness.has_value());
  CHECK(replay(f, *self.witness) == f);

  auto b2 = make_space(kB2);
  ClassLabeling lb = odd_components(b2->diagram());
  CoxeterWord cwb = coxeter_word(b2->diagram(), {1, 2});
  Factorization fb(*b2, {b2->simple(1), b2->simple(2), b2->simple(2), b2->simple(2)});
  Factorization gb(*b2, {b2->simple(1), b2->simple(1), b2->simple(1), b2->simple(2)});
  Decision db = connect(fb, gb, cwb, lb);
  CHECK_FALSE(db.equivalent);
  CHECK_FALSE(db.witness.has_value());
}

TEST_CASE("connect with a non-identity Coxeter word") {
  auto a3 = make_space(kA3);
  ClassLabeling lab = odd_components(a3->diagram());
  CoxeterWord cw = coxeter_word(a3->diagram(), {3, 1, 2});
  Factorization seed(*a3, {a3->simple(3), a3->simple(1), a3->simple(2),
                           a3->simple(2), a3->simple(2)});
  REQUIRE(seed.target() == a3->element_of_word(cw.letters));
  std::mt19937_64 rng(91);
  Factorization f = random_walk(seed, rng, 10);
  Factorization g = random_walk(seed, rng, 10);
  CHECK_NOTHROW(validate_coxeter_target(*a3, cw, f));
  Decision d = connect(f, g, cw, lab);
  REQUIRE(d.equivalent);
  REQUIRE(d.witness.has_value());
  CHECK(replay(f, *d.witness) == g);

  auto [canon, braid] = canonicalize(f, cw, lab);
  CHECK(canon.factor(1) == a3->simple(3));
  CHECK(canon.factor(2) == a3->simple(1));
  CHECK(canon.factor(3) == a3->simple(2));
}

TEST_CASE("connect in the smallest system") {
  auto a1 = make_space("rank 1");
  ClassLabeling lab = odd_components(a1->diagram());
  CoxeterWord cw = coxeter_word(a1->diagram(), {1});
  Factorization f(*a1, {a1->simple(1), a1->simple(1), a1->simple(1)});
  Decision d = connect(f, f, cw, lab);
  REQUIRE(d.equivalent);
  CHECK(replay(f, *d.witness) == f);
  NormalForm nf = normalize(f);
  CHECK(nf.core.size() == 1);
  CHECK(nf.pairs.size() == 1);
}

TEST_CASE("connect witnesses verify in the infinite dihedral group") {
  std::mt19937_64 rng(71);
  auto inf = make_space(kI2inf);
  ClassLabeling li = odd_components(inf->diagram());
  CoxeterWord cw = coxeter_word(inf->diagram(), {1, 2});
  for (int trial = 0; trial < 10; ++trial) {
    int k = trial % 3;
    std::vector<int> pairs;
    for (int j = 0; j < k; ++j) pairs.push_back(1 + ((trial + j) % 2));
    Factorization seed = canonical_factorization(*inf, pairs);
    Factorization f = random_walk(seed, rng, 10);
    Factorization g = random_walk(seed, rng, 10);
    Decision d = connect(f, g, cw, li);
    REQUIRE(d.equivalent);
    REQUIRE(d.witness.has_value());
    CHECK(replay(f, *d.witness) == g);
  }
}
