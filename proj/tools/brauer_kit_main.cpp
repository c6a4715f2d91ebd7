// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

// brauer-kit: batch front end over the C API. Flags become a JSON request;
// the response envelope goes to stdout.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/brauer_kit.h"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

const Flag kValueFlags[] = {
    {"ring", "ring spec: QQ, GF(p), GF(p^e;c0,..,1), Z/p^k, Z/N"},
    {"n", "projective dimension"},
    {"a", "ring element"},
    {"b", "ring element"},
    {"point", "projective point as x0,x1,..."},
    {"matrix", "matrix JSON"},
    {"algebra", "algebra JSON, @file, builtin:Mk, builtin:Dk or builtin:Q(a,b)"},
    {"ideal", "ideal JSON (basis in algebra coordinates)"},
    {"bound", "search bound"},
    {"seed", "seed for randomized checks (default 0)"},
    {"samples", "sample count for checks over QQ"},
    {"quaternion", "quaternion parameters a,b"},
    {"level", "selftest level: quick or full"},
};

const char* kSubcommands[][2] = {
    {"azumaya-check", "check that an algebra is Azumaya"},
    {"quat-split", "explicit isomorphism Q(a,b) -> M_2"},
    {"param-conic", "parametrize the conic x^2 = a y^2 + b z^2 from a point"},
    {"conic-points", "list points of a conic"},
    {"delta", "right ideal of M_{n+1} attached to a point of P^n"},
    {"delta-inv", "point of P^n attached to a right ideal"},
    {"conjugator", "recover P from matrix units P E_ij P^-1"},
    {"aut-to-pgl", "recover P from an automorphism of M_{n+1}"},
    {"split", "isomorphism A -> M_{n+1} from a right ideal"},
    {"chatelet", "map right ideals of A to points of P^n"},
    {"find-ideal", "search for a right ideal of rank n+1"},
    {"selftest", "run the built-in check suites"},
};

int emit_usage_error(const std::string& detail) {
  nlohmann::ordered_json env{{"ok", false}, {"error", bk_status_name(BK_USAGE_ERROR)}, {"detail", detail}};
  std::cout << env.dump() << '\n';
  return bk_exit_code(BK_USAGE_ERROR);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Azumaya algebras, right ideals and conics"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", bk_version());

  std::map<std::string, std::string> values;
  bool no_verify = false;
  for (const auto& sc : kSubcommands) {
    CLI::App* sub = app.add_subcommand(sc[0], sc[1]);
    for (const auto& f : kValueFlags) sub->add_option(std::string("--") + f.name, values[f.name], f.help);
    sub->add_flag("--no-verify", no_verify, "skip verification work");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_usage_error(e.what());
  }

  nlohmann::ordered_json request = nlohmann::ordered_json::object();
  for (const auto& f : kValueFlags) {
    CLI::App* sub = app.get_subcommands().front();
    if (sub->count(std::string("--") + f.name) > 0) request[f.name] = values[f.name];
  }
  if (no_verify) request["verify"] = false;

  const std::string subcommand = app.get_subcommands().front()->get_name();
  char* response = nullptr;
  bk_status status = bk_command(subcommand.c_str(), request.dump().c_str(), &response);
  if (response) {
    std::cout << response << '\n';
    bk_string_free(response);
  } else {
    return emit_usage_error(bk_last_error_detail());
  }
  return bk_exit_code(status);
}
