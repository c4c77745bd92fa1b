#include <iostream>

#include "wap/deciders.hpp"

int main() {
  const auto cert = wap::decide_wap(wap::Morphism::parse("0001/1011"), 0);
  std::cout << to_string(cert.condition) << ' ' << *cert.lhs << '\n';
  return cert.wap ? 1 : 0;
}
