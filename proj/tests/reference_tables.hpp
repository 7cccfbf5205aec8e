#pragma once

// Connective tables transcribed row by row as element labels, independently of the
// library's id arrays. Rows are the first argument, columns the second.

#include <map>
#include <string>
#include <vector>

namespace twistlab::reference {

using rows = std::vector<std::string>;

inline const std::vector<std::string> labels3 = {"0", "1/2", "1"};
inline const std::vector<std::string> labels4 = {"0", "bot", "top", "1"};

inline const std::map<std::string, rows>& three_valued() {
  static const std::map<std::string, rows> t = {
    {"neg", {"1", "1/2", "0"}},
    {"and_ol", {"0 0 0", "0 1/2 1", "0 1 1"}},
    {"or_ol", {"0 0 1", "0 1/2 1", "1 1 1"}},
    {"and_k", {"0 0 0", "0 1/2 1/2", "0 1/2 1"}},
    {"or_k", {"0 1/2 1", "1/2 1/2 1", "1 1 1"}},
    {"imp_ol", {"1/2 1/2 1/2", "0 1/2 1", "0 1/2 1"}},
    {"imp_df", {"1/2 1/2 1/2", "1/2 1/2 1/2", "0 1/2 1"}},
    {"imp_f", {"1/2 1/2 1/2", "0 1/2 1/2", "0 1/2 1"}},
  };
  return t;
}

inline const std::map<std::string, rows>& four_valued() {
  static const std::map<std::string, rows> t = {
    {"neg_g", {"1", "bot", "top", "0"}},
    {"neg_f", {"1", "top", "bot", "0"}},
    {"imp_ol", {"top top top top", "top top top top", "0 bot top 1", "0 bot top 1"}},
    {"and_ol", {"0 0 0 0", "0 0 bot bot", "0 bot top 1", "0 bot 1 1"}},
    {"or_ol", {"0 bot 0 1", "bot 1 bot 1", "0 bot top 1", "1 1 1 1"}},
    {"imp_df", {"top top top top", "0 bot 0 bot", "top top top top", "0 bot top 1"}},
    {"and_k", {"0 0 0 0", "0 bot 0 bot", "0 0 top top", "0 bot top 1"}},
    {"or_k", {"0 bot top 1", "bot bot 1 1", "top 1 top 1", "1 1 1 1"}},
    {"imp_f", {"top top top top", "top 1 top 1", "0 0 top top", "0 bot top 1"}},
  };
  return t;
}

/// Which transcribed table each matrix uses for neg, and, or, imp ("" when absent).
struct composition {
  std::string neg, conj, disj, imp;
};

inline const std::map<std::string, composition>& matrices() {
  static const std::map<std::string, composition> m = {
    {"DF3", {"neg", "and_k", "or_k", "imp_df"}},      {"OL3", {"neg", "and_ol", "or_ol", "imp_ol"}},
    {"CN3", {"neg", "and_k", "or_k", "imp_ol"}},      {"F3", {"neg", "and_k", "or_k", "imp_f"}},
    {"DFg4", {"neg_g", "and_k", "or_k", "imp_df"}},   {"OLg4", {"neg_g", "and_ol", "or_ol", "imp_ol"}},
    {"CNg4", {"neg_g", "and_k", "or_k", "imp_ol"}},   {"Fg4", {"neg_g", "and_k", "or_k", "imp_f"}},
    {"DFf4", {"neg_f", "and_k", "or_k", ""}},         {"OLf4", {"neg_f", "and_ol", "or_ol", "imp_ol"}},
    {"CNf4", {"neg_f", "and_k", "or_k", "imp_ol"}},   {"Ff4", {"neg_f", "and_k", "or_k", "imp_f"}},
  };
  return m;
}

} // namespace twistlab::reference
