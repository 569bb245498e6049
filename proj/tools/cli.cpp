#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "manin/io.hpp"
#include "manin/operad.hpp"
#include "manin/products.hpp"

namespace manin::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

struct Verb {
  const char* name;
  const char* alias;
  std::size_t files;
};

constexpr Verb kVerbs[] = {
    {"w", "white", 2}, {"b", "black", 2}, {"d", "dual", 1},   {"check", nullptr, 1},
    {"info", nullptr, 1}, {"orbits", nullptr, 1}, {"render", nullptr, 1},
};

const Verb* find_verb(const std::string& word) {
  for (const auto& v : kVerbs) {
    if (word == v.name || (v.alias && word == v.alias)) return &v;
  }
  return nullptr;
}

const char* kVerbHelp =
    "verbs:\n"
    "  w|white  FILE1 FILE2   white product, written to PREFIX and PREFIX.amx\n"
    "  b|black  FILE1 FILE2   black product, written to PREFIX and PREFIX.amx\n"
    "  d|dual   FILE          Koszul dual, written to PREFIX and PREFIX.amx\n"
    "  check    FILE          validate and report S3-closure growth\n"
    "  info     FILE          print n, dim R and dim P(3)\n"
    "  orbits   FILE          print S3-orbit generators of the relations\n"
    "  render   FILE          print the relations as monomials\n";

ParsedOperad load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParse, path + ": cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    ParsedOperad parsed = parse_operad_file(buf.str());
    if (parsed.closure_enlarged()) {
      err << "manin: warning: " << path << ": relations are not S3-closed; closure raised the rank from "
          << parsed.supplied_rank << " to " << parsed.presentation.relations().dim() << "\n";
    }
    return parsed;
  } catch (const ParseError& e) {
    throw Failure{kParse, path + ": " + e.what()};
  } catch (const Error& e) {
    throw Failure{kInvalid, path + ": " + e.what()};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw Failure{kInvalid, path + ": cannot write file"};
}

void emit_result(const OperadPresentation& p, const std::string& prefix, std::ostream& out) {
  write_file(prefix, write_operad(p, p.label()));
  write_file(prefix + ".amx", write_amx(p));
  out << p.label() << ": n = " << p.n() << ", " << p.relations().dim() << " relations, dim P(3) = " << dim_space3(p)
      << "\nwritten to " << prefix << " and " << prefix << ".amx\n";
}

std::string base_name(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

// Products are labelled by file name so that `result` records its origin.
OperadPresentation named(ParsedOperad parsed, const std::string& path) {
  return parsed.presentation.with_label(base_name(path));
}

int dispatch(const Verb& verb, const std::vector<std::string>& files, const std::string& prefix, std::ostream& out,
             std::ostream& err) {
  const std::string name = verb.name;
  if (name == "w" || name == "b") {
    const auto p1 = named(load(files[0], err), files[0]);
    const auto p2 = named(load(files[1], err), files[1]);
    emit_result(name == "w" ? white(p1, p2) : black(p1, p2), prefix, out);
  } else if (name == "d") {
    emit_result(koszul_dual(named(load(files[0], err), files[0])), prefix, out);
  } else if (name == "check") {
    const auto parsed = load(files[0], err);
    const auto& p = parsed.presentation;
    out << files[0] << ": valid, n = " << p.n() << ", supplied rank " << parsed.supplied_rank << ", closed rank "
        << p.relations().dim() << "\n";
    out << (parsed.closure_enlarged() ? "S3-closure enlarged the relation span\n"
                                      : "relations are closed under S3\n");
  } else if (name == "info") {
    const auto p = load(files[0], err).presentation;
    out << "n = " << p.n() << "\ndim R = " << p.relations().dim() << "\ndim P(3) = " << dim_space3(p) << "\n";
  } else if (name == "orbits") {
    const auto p = load(files[0], err).presentation;
    const auto generators = orbit_generators(p);
    out << generators.size() << " orbit generator(s)\n";
    for (const auto& g : generators) out << monomial_render(p, g) << "\n";
  } else {
    const auto p = load(files[0], err).presentation;
    for (const auto& r : p.relations().rows()) out << monomial_render(p, r) << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Manin products and Koszul duals of binary quadratic operads", "manin"};
  app.footer(kVerbHelp);
  std::string verb_word;
  std::vector<std::string> files;
  std::string prefix = "result";
  app.add_option("verb", verb_word, "w, b, d, check, info, orbits or render")->required();
  app.add_option("files", files, "presentation files")->required();
  app.add_option("-o,--output", prefix, "output file prefix (default: result)");

  std::vector<const char*> argv{"manin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "manin: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const Verb* verb = find_verb(verb_word);
  if (!verb) {
    err << "manin: unknown verb '" << verb_word << "'\n" << app.help();
    return kUsage;
  }
  if (files.size() != verb->files) {
    err << "manin: '" << verb_word << "' takes " << verb->files << " file(s), got " << files.size() << "\n"
        << app.help();
    return kUsage;
  }

  try {
    return dispatch(*verb, files, prefix, out, err);
  } catch (const Failure& f) {
    err << "manin: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "manin: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace manin::cli
