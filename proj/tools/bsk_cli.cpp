// Command-line front end (work in progress; subcommands land with their
// library modules).
#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::puts("bsk: no subcommands wired up yet");
  return 2;
}
