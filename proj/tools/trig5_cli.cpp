// Command-line front end for the trig5 shared library.  Talks to the engine
// exclusively through the C interface.
//
// Exit codes: 0 success / all checks match, 1 verification or assertion
// failure, 2 usage error.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "trig5/trig5.h"

namespace {

int finish(t5_status st, char* out, bool ok = true) {
  if (st == T5_OK && out) {
    std::fputs(out, stdout);
    t5_string_free(out);
    return ok ? 0 : 1;
  }
  std::fprintf(stderr, "error: %s\n", t5_last_error());
  return st == T5_ERR_USAGE ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology of the moduli space of trigonal genus-5 curves"};
  app.require_subcommand(1);
  std::string format = "pretty";
  app.add_option("--format", format, "output format: json, markdown or pretty")
      ->capture_default_str();

  std::string lemma_id, column_id, table_id = "3", explain_id, space, qs;
  int config = 0;
  bool all = false;

  CLI::App* lemma = app.add_subcommand("lemma", "building-block polynomial");
  lemma->add_option("--id", lemma_id, "lemma id, e.g. 2.4")->required();
  lemma->fallthrough();

  CLI::App* column = app.add_subcommand("column", "one column of the discriminant resolution");
  column->add_option("--id", column_id, "A..H, IJ, L or M")->required();
  column->fallthrough();

  CLI::App* table = app.add_subcommand("table", "render a computed table");
  table->add_option("--id", table_id, "1..4 or a group id (S2 S3 S4 S5 D4)");
  table->fallthrough();

  CLI::App* pipeline = app.add_subcommand("pipeline", "run the whole computation");
  pipeline->fallthrough();

  CLI::App* appendix = app.add_subcommand("appendix", "triviality derivation for one configuration");
  appendix->add_option("--config", config, "configuration number, 42..59")->required();
  appendix->fallthrough();

  CLI::App* verify = app.add_subcommand("verify", "finite-field counts against Euler values");
  verify->add_option("--id", space, "space name, e.g. Ftilde2");
  verify->add_option("--q", qs, "single prime q");
  verify->add_option("--qs", qs, "comma-separated primes, default 2,3,5,7");
  verify->add_flag("--all", all, "run every registered space");
  verify->fallthrough();

  CLI::App* explain = app.add_subcommand("explain", "replayable derivation trace");
  explain->add_option("--id", explain_id, "column id, config number, or 2.4 / 2.5")->required();
  explain->fallthrough();

  CLI11_PARSE(app, argc, argv);

  char* out = nullptr;
  if (lemma->parsed()) {
    t5_status st = t5_lemma(lemma_id.c_str(), format.c_str(), &out);
    return finish(st, out);
  }
  if (column->parsed()) {
    t5_status st = t5_column(column_id.c_str(), format.c_str(), &out);
    return finish(st, out);
  }
  if (table->parsed()) {
    t5_status st = t5_table(table_id.c_str(), format.c_str(), &out);
    return finish(st, out);
  }
  if (pipeline->parsed()) {
    int ok = 0;
    t5_status st = t5_pipeline(format.c_str(), &out, &ok);
    return finish(st, out, ok == 1);
  }
  if (appendix->parsed()) {
    t5_status st = t5_appendix(config, format.c_str(), &out);
    return finish(st, out);
  }
  if (verify->parsed()) {
    int match = 0;
    const char* spaces_csv = (all || space.empty()) ? nullptr : space.c_str();
    const char* qs_csv = qs.empty() ? nullptr : qs.c_str();
    t5_status st = t5_verify(spaces_csv, qs_csv, format.c_str(), &out, &match);
    return finish(st, out, match == 1);
  }
  if (explain->parsed()) {
    t5_status st = t5_explain(explain_id.c_str(), format.c_str(), &out);
    return finish(st, out);
  }
  return 2;
}
