#include "micc/cli.hpp"

#include <csignal>
#include <iostream>
#include <stop_token>

namespace {

std::stop_source* interrupt = nullptr;

extern "C" void on_interrupt(int) {
  if (interrupt) interrupt->request_stop();
}

}  // namespace

int main(int argc, char** argv) {
  // Ctrl-C cancels the running computation; a second one ends the process.
  std::stop_source source;
  interrupt = &source;
  std::signal(SIGINT, [](int sig) {
    on_interrupt(sig);
    std::signal(SIGINT, SIG_DFL);
  });
  return micc::run_cli(argc, argv, std::cin, std::cout, std::cerr, source.get_token());
}
