#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vlsikit/vlsikit.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Escapes a message for the JSON error object printed on stderr.
std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    switch (c) {
      case '"': q += "\\\""; break;
      case '\\': q += "\\\\"; break;
      case '\n': q += "\\n"; break;
      default: q += c;
    }
  }
  return q + "\"";
}

int finish(vk_status status, vk_report* report) {
  if (status == VK_OK) {
    std::fputs(vk_report_text(report), stdout);
  } else if (report && vk_report_error(report)) {
    std::fputs(vk_report_error(report), stderr);
  } else {
    std::fprintf(stderr, "{\"error\":{\"kind\":\"internal\",\"message\":%s}}\n", quoted(vk_last_error()).c_str());
  }
  vk_report_free(report);
  switch (status) {
    case VK_OK: return 0;
    case VK_ERR_INPUT:
    case VK_ERR_NULL: return 1;
    default: return 2;
  }
}

int with_case(const std::string& path, vk_status (*op)(const char*, vk_format, vk_report**), vk_format f) {
  std::string text;
  if (!read_file(path, text)) {
    std::fprintf(stderr, "{\"error\":{\"kind\":\"input\",\"message\":%s}}\n",
                 quoted("cannot read " + path).c_str());
    return 1;
  }
  vk_report* r = nullptr;
  vk_status s = op(text.c_str(), f, &r);
  return finish(s, r);
}

vk_status validate_op(const char* text, vk_format, vk_report** out) { return vk_validate_case(text, out); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VLSI analysis toolkit: runs JSON case files"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vk_version()));

  std::string path;
  std::string format = "json";
  auto* run = app.add_subcommand("run", "run a case file and print its report");
  run->add_option("case", path, "case file")->required();
  run->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* validate = app.add_subcommand("validate", "check a case file without running it");
  validate->add_option("case", path, "case file")->required();

  auto* list = app.add_subcommand("list", "list analyses and their parameters");
  list->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  vk_format f = format == "table" ? VK_FORMAT_TABLE : VK_FORMAT_JSON;
  if (*run) return with_case(path, vk_run_case, f);
  if (*validate) return with_case(path, validate_op, f);
  if (*list) {
    vk_report* r = nullptr;
    vk_status s = vk_list(f, &r);
    return finish(s, r);
  }
  return 1;
}
