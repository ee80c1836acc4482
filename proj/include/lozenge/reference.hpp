#pragma once

#include "lozenge/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lozenge {

struct ReferenceEntry {
  int n;
  int l;
  std::string_view count;
  std::string_view source;
};

/// Published counts L_{n,l} for n <= 15, l <= 11, plus the published row sums and
/// maximal-packing values.
class ReferenceTable {
 public:
  static const std::vector<ReferenceEntry>& entries() {
    static const std::vector<ReferenceEntry> table = build();
    return table;
  }

  static std::optional<BigInt> lookup(int n, int l) {
    for (const auto& e : entries()) {
      if (e.n == n && e.l == l) return parse_decimal(e.count);
    }
    return std::nullopt;
  }

  // Row sums for n = 1, 2, ...
  static const std::vector<std::string_view>& row_sums() {
    static const std::vector<std::string_view> sums{"1", "4", "52", "2158", "286242", "121479420"};
    return sums;
  }

  // L_{n, max l} for n = 1, 2, ...
  static const std::vector<std::string_view>& maximal_packings() {
    static const std::vector<std::string_view> values{"1",        "3",         "18",          "187",
                                                      "3135",     "81462",     "3198404",     "186498819",
                                                      "15952438877", "1983341709785"};
    return values;
  }

 private:
  static std::vector<ReferenceEntry> build() {
    // Row n lists l = 0, 1, ... as printed.
    static constexpr std::string_view rows[15][12] = {
        {"1"},
        {"1", "3"},
        {"1", "9", "24", "18"},
        {"1", "18", "126", "434", "762", "630", "187"},
        {"1", "30", "387", "2814", "12699", "36894", "69242", "81936", "57672", "21432", "3135"},
        {"1", "45", "915", "11127", "90270", "515970", "2139120", "6523428", "14683401", "24256853", "28975770",
         "24383838"},
        {"1", "63", "1845", "33365", "417435", "3836439", "26841853", "146208393", "628823088", "2153224090",
         "5892984618", "12892017948"},
        {"1", "84", "3339", "83568", "1478160", "19662060", "204334715", "1701554868", "11554013295",
         "64766667704", "302315092020", "1181998895448"},
        {"1", "108", "5586", "184254", "4354497", "78536358", "1124301411", "13119112488", "127156871457",
         "1038068322606", "7212713283360", "42993319234518"},
        {"1", "135", "8802", "369254", "11203269", "261985815", "4914087052", "75970268748", "987147811836",
         "10940096605816", "104581114754595", "869988063985737"},
        {"1", "165", "13230", "686952", "25970895", "762098799", "18070041680", "355864850838", "5938169156829",
         "85230974965513", "1064629166358066", "11681266282861098"},
        {"1", "198", "19140", "1203930", "55414395", "1990014156", "58055896449", "1414611219018",
         "29375579984238", "527873999198830", "8307168403048731", "115585010198220444"},
        {"1", "234", "26829", "2009018", "110505120", "4761037260", "167316709165", "4931688363498",
         "124419130905960", "2728420121843584", "52640100670770348", "902231390539173210"},
        {"1", "273", "36621", "3217749", "208300257", "10594451901", "440911546295", "15439933756251",
         "464317587238419", "12178604171344167", "282021772415608164", "5822744874311864316"},
        {"1", "315", "48867", "4977219", "374375664", "22178743326", "1077784772922", "44182928710470",
         "1559497806005040", "48137813623437500", "1315457502665712336", "32139701729335767774"},
    };
    std::vector<ReferenceEntry> out;
    for (int n = 1; n <= 15; ++n) {
      for (int l = 0; l < 12; ++l) {
        const auto v = rows[n - 1][l];
        if (!v.empty()) out.push_back({n, l, v, "published table"});
      }
    }
    return out;
  }
};

}  // namespace lozenge
