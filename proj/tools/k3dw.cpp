#include <iostream>

#include "k3dw_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3dw::app::run(std::move(args), std::cout, std::cerr);
}
