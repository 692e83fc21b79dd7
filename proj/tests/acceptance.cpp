// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Filled in criterion by criterion below.

#include "shilov/props.hpp"

#include <cstdio>

int main() {
  std::printf("acceptance suite placeholder\n");
  return 0;
}
