#pragma once

#include "catkern/catspec.hpp"

#include <string>

namespace catkern::test {

inline CatPtr cat_one() {
  return parse_catspec("object star\n"
                       "morphism id_star : star -> star\n"
                       "identity star = id_star\n"
                       "compose id_star . id_star = id_star\n")
      .category;
}

inline CatPtr walking_arrow() {
  return parse_catspec("object a\nobject b\n"
                       "morphism id_a : a -> a\nmorphism id_b : b -> b\n"
                       "morphism f : a -> b\n"
                       "identity a = id_a\nidentity b = id_b\n"
                       "compose id_a . id_a = id_a\ncompose id_b . id_b = id_b\n"
                       "compose f . id_a = f\ncompose id_b . f = f\n")
      .category;
}

inline CatPtr c2_monoid() {
  return parse_catspec("object m\n"
                       "morphism e : m -> m\nmorphism g : m -> m\n"
                       "identity m = e\n"
                       "compose e . e = e\ncompose e . g = g\n"
                       "compose g . e = g\ncompose g . g = e\n")
      .category;
}

inline CatPtr parallel_pair() {
  return parse_catspec("object a\nobject b\n"
                       "morphism id_a : a -> a\nmorphism id_b : b -> b\n"
                       "morphism f : a -> b\nmorphism g : a -> b\n"
                       "identity a = id_a\nidentity b = id_b\n"
                       "compose id_a . id_a = id_a\ncompose id_b . id_b = id_b\n"
                       "compose f . id_a = f\ncompose id_b . f = f\n"
                       "compose g . id_a = g\ncompose id_b . g = g\n")
      .category;
}

} // namespace catkern::test
