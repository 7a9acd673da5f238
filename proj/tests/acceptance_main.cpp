#include <iostream>

#include "su11net/verify.hpp"

int main() {
  const int failures = su11net::verify::report(std::cout);
  return failures == 0 ? 0 : 1;
}
