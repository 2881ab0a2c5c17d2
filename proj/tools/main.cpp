#include <CLI11.hpp>
#include <cstdio>
#include <exception>

#include "ffrace/errors.hpp"
#include "ffrace/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "L-functions and prime races for quadratic characters over F_q[x]"};
  app.set_version_flag("--version", ffrace::kToolVersion);
  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
    if (app.get_subcommands().empty()) {
      std::puts(app.help().c_str());
      return 0;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ffrace::error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", ffrace::errc_name(e.code()),
                 e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
