// Heuristic Java-style source scanner. This is a stand-in for a real static
// analyzer: it understands just enough syntax to find top-level type
// declarations, count call sites by simple-name resolution and harvest
// vocabulary from identifiers and comments.

#include "msdecomp/scan.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace msd {
namespace {

namespace fs = std::filesystem;

const std::set<std::string>& java_keywords() {
  static const std::set<std::string> kw = {
      "abstract",   "assert",    "boolean",  "break",     "byte",      "case",
      "catch",      "char",      "class",    "const",     "continue",  "default",
      "do",         "double",    "else",     "enum",      "extends",   "final",
      "finally",    "float",     "for",      "goto",      "if",        "implements",
      "import",     "instanceof","int",      "interface", "long",      "native",
      "new",        "package",   "private",  "protected", "public",    "record",
      "return",     "short",     "static",   "strictfp",  "super",     "switch",
      "synchronized","this",     "throw",    "throws",    "transient", "try",
      "var",        "void",      "volatile", "while",     "true",      "false",
      "null",
  };
  return kw;
}

struct Token {
  enum Kind { Identifier, Punct } kind;
  std::string text;
  int depth;  // brace depth before the token
};

struct FileContent {
  std::vector<Token> tokens;
  // comment text with the brace depth and token position where it appeared
  struct Comment {
    std::string text;
    std::size_t token_pos;  // index of the next token after the comment
  };
  std::vector<Comment> comments;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Strips literals, records comments, tokenizes the rest with brace depths.
FileContent tokenize(const std::string& text) {
  FileContent out;
  int depth = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      std::size_t end = text.find('\n', i);
      if (end == std::string::npos) end = n;
      out.comments.push_back({text.substr(i + 2, end - i - 2), out.tokens.size()});
      i = end;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      std::size_t end = text.find("*/", i + 2);
      if (end == std::string::npos) end = n;
      out.comments.push_back({text.substr(i + 2, end - i - 2), out.tokens.size()});
      i = end == n ? n : end + 2;
      continue;
    }
    if (c == '"' || c == '\'') {
      const char quote = c;
      ++i;
      while (i < n && text[i] != quote) {
        if (text[i] == '\\') ++i;
        ++i;
      }
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t end = i;
      while (end < n && ident_char(text[end])) ++end;
      out.tokens.push_back({Token::Identifier, text.substr(i, end - i), depth});
      i = end;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.tokens.push_back({Token::Punct, std::string(1, c), depth});
      if (c == '{') ++depth;
      if (c == '}') depth = std::max(0, depth - 1);
    }
    ++i;
  }
  return out;
}

struct DeclaredClass {
  std::string simple_name;
  std::string qualified_name;
  std::string file;           // for stable ids on name clashes
  std::size_t body_begin = 0; // token range of the class body
  std::size_t body_end = 0;
};

bool is_type_keyword(const Token& t) {
  return t.kind == Token::Identifier &&
         (t.text == "class" || t.text == "interface" || t.text == "enum" ||
          t.text == "record");
}

// Finds top-level declarations in one tokenized file.
std::vector<DeclaredClass> find_declarations(const FileContent& content,
                                             const std::string& file) {
  std::vector<DeclaredClass> found;
  const auto& toks = content.tokens;

  std::string package;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].kind == Token::Identifier && toks[i].text == "package") {
      std::string acc;
      for (std::size_t j = i + 1; j < toks.size(); ++j) {
        if (toks[j].kind == Token::Punct && toks[j].text == ";") break;
        acc += toks[j].text;
      }
      package = acc;
      break;
    }
  }

  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].depth != 0 || !is_type_keyword(toks[i])) continue;
    // `.class` literals and `Foo.record` style accesses are not declarations
    if (i > 0 && toks[i - 1].kind == Token::Punct && toks[i - 1].text == ".") continue;
    if (toks[i + 1].kind != Token::Identifier) continue;

    DeclaredClass decl;
    decl.simple_name = toks[i + 1].text;
    decl.qualified_name =
        package.empty() ? decl.simple_name : package + "." + decl.simple_name;
    decl.file = file;

    // body = first '{' after the declaration until its matching '}'
    std::size_t j = i + 2;
    while (j < toks.size() && !(toks[j].kind == Token::Punct && toks[j].text == "{"))
      ++j;
    if (j == toks.size()) continue;
    int open = 0;
    std::size_t k = j;
    for (; k < toks.size(); ++k) {
      if (toks[k].kind != Token::Punct) continue;
      if (toks[k].text == "{") ++open;
      if (toks[k].text == "}" && --open == 0) break;
    }
    decl.body_begin = j + 1;
    decl.body_end = k;
    found.push_back(std::move(decl));
    i = j;  // continue after the opening brace; nested types are skipped by depth
  }
  return found;
}

std::vector<std::string> comment_words(const std::string& text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      current.push_back(c);
    } else if (!current.empty()) {
      words.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(current);
  return words;
}

} // namespace

MonolithGraph scan_sources(const std::string& root, const ScanOptions& options,
                           ScanReport* report) {
  if (!fs::exists(root) || !fs::is_directory(root))
    throw std::runtime_error("scan root is not a directory: " + root);

  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (std::find(options.extensions.begin(), options.extensions.end(), ext) !=
        options.extensions.end())
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::runtime_error("no source files found under: " + root);

  ScanReport local;

  struct ParsedFile {
    FileContent content;
    std::vector<DeclaredClass> decls;
  };
  std::vector<ParsedFile> parsed;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) {
      if (options.strict)
        throw std::runtime_error("unreadable source file: " + path.string());
      ++local.files_skipped;
      continue;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    ParsedFile pf;
    pf.content = tokenize(buffer.str());
    pf.decls = find_declarations(pf.content, path.string());
    parsed.push_back(std::move(pf));
    ++local.files_scanned;
  }

  // simple name -> qualified name when unique; ambiguous names resolve to
  // nothing (conservative under-approximation)
  std::map<std::string, std::string> unique_simple;
  std::set<std::string> ambiguous_simple;
  std::set<std::string> qualified_seen;
  for (const auto& pf : parsed) {
    for (const auto& d : pf.decls) {
      if (!qualified_seen.insert(d.qualified_name).second)
        throw std::runtime_error("duplicate class declaration: " + d.qualified_name);
      if (ambiguous_simple.count(d.simple_name)) continue;
      auto [it, inserted] = unique_simple.emplace(d.simple_name, d.qualified_name);
      if (!inserted) {
        unique_simple.erase(it);
        ambiguous_simple.insert(d.simple_name);
      }
    }
  }
  auto known_simple = [&](const std::string& name) {
    return unique_simple.count(name) > 0 || ambiguous_simple.count(name) > 0;
  };

  GraphRecords records;
  std::map<std::pair<std::string, std::string>, std::int64_t> calls;
  const auto& keywords = java_keywords();

  for (const auto& pf : parsed) {
    const auto& toks = pf.content.tokens;
    for (const auto& decl : pf.decls) {
      ClassNode node;
      node.id = decl.qualified_name;
      node.name = decl.qualified_name;
      node.terms.add(decl.simple_name);

      // local variable / field simple types seen in this body
      std::map<std::string, std::string> var_types;

      auto resolve = [&](const std::string& simple) -> const std::string* {
        if (ambiguous_simple.count(simple)) {
          ++local.ambiguous_calls_dropped;
          return nullptr;
        }
        auto it = unique_simple.find(simple);
        return it == unique_simple.end() ? nullptr : &it->second;
      };

      auto add_call = [&](const std::string& callee_qualified) {
        ++calls[{decl.qualified_name, callee_qualified}];
      };

      for (std::size_t t = decl.body_begin; t < decl.body_end && t < toks.size(); ++t) {
        const Token& tok = toks[t];
        if (tok.kind != Token::Identifier) continue;
        const bool keyword = keywords.count(tok.text) > 0;
        if (!keyword) node.terms.add(tok.text);

        auto next = [&](std::size_t offset) -> const Token* {
          return t + offset < decl.body_end ? &toks[t + offset] : nullptr;
        };

        // constructor call: new Name (
        if (tok.text == "new") {
          const Token* name = next(1);
          const Token* paren = next(2);
          if (name && paren && name->kind == Token::Identifier &&
              !keywords.count(name->text) && paren->kind == Token::Punct &&
              paren->text == "(") {
            if (const std::string* callee = resolve(name->text)) add_call(*callee);
          }
          continue;
        }
        if (keyword) continue;

        const Token* dot = next(1);
        const Token* member = next(2);
        const Token* paren = next(3);
        if (dot && member && paren && dot->kind == Token::Punct && dot->text == "." &&
            member->kind == Token::Identifier && paren->kind == Token::Punct &&
            paren->text == "(") {
          auto var = var_types.find(tok.text);
          if (var != var_types.end()) {
            // member call through a declared variable
            if (const std::string* callee = resolve(var->second)) add_call(*callee);
          } else if (known_simple(tok.text)) {
            // static-style call through the class simple name
            if (const std::string* callee = resolve(tok.text)) add_call(*callee);
          }
          continue;
        }

        // declaration: Type ident  (ident not immediately invoked)
        const Token* ident = next(1);
        if (ident && ident->kind == Token::Identifier &&
            !keywords.count(ident->text) && known_simple(tok.text)) {
          const Token* after = next(2);
          const bool call_like =
              after && after->kind == Token::Punct && after->text == "(";
          if (!call_like) var_types[ident->text] = tok.text;
        }
      }

      if (options.include_comments) {
        for (const auto& comment : pf.content.comments) {
          if (comment.token_pos < decl.body_begin || comment.token_pos > decl.body_end)
            continue;
          for (const auto& word : comment_words(comment.text)) {
            if (!keywords.count(word)) node.terms.add(word);
          }
        }
      }

      records.classes.push_back(std::move(node));
    }
  }

  if (records.classes.empty())
    throw std::runtime_error("no class declarations found under: " + root);

  for (const auto& [pair, count] : calls)
    records.edges.push_back({pair.first, pair.second, count});

  MonolithGraph graph = build_graph(records, &local.load);
  if (report) *report = local;
  return graph;
}

} // namespace msd
