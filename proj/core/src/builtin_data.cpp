#include "mapcount/laurent.hpp"

#include <cstddef>
#include <span>

namespace mapcount {
namespace {

// Initial coefficient vectors for nu = 2, transcribed verbatim (padded form,
// leading zeros included). The genus-1 two-legged vector distributes the
// overall 1/3 factor over its entries.

const char* const kTwoLegged1[] = {
    "0",
    "2/3",
    "-4/3",
    "2/3",
};

const char* const kTwoLegged2[] = {
    "0",
    "0",
    "0",
    "-14",
    "700/9",
    "-1540/9",
    "560/3",
    "-910/9",
    "196/9",
};

const char* const kTwoLegged3[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "10796/9",
    "-297416/27",
    "1182748/27",
    "-888160/9",
    "3723580/27",
    "-3308648/27",
    "608972/9",
    "-573488/27",
    "78400/27",
};

const char* const kTwoLegged4[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "-18696694/81",
    "26661644/9",
    "-1387088600/81",
    "4772537840/81",
    "-10869779620/81",
    "17220205688/81",
    "-19375553512/81",
    "15491885600/81",
    "-8630131990/81",
    "1063795540/27",
    "-705318544/81",
    "70598416/81",
};

const char* const kTwoLegged5[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "709788436/9",
    "-105371101864/81",
    "800494094596/81",
    "-412819350944/9",
    "11778382939400/81",
    "-26995581694928/81",
    "5128257594152/9",
    "-2215723834016/3",
    "729617439012",
    "-4921613081000/9",
    "24801764653204/81",
    "-10063123626304/81",
    "310842049504/9",
    "-477090039776/81",
    "37662732800/81",
};

const char* const kTwoLegged6[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "-10225685162212/243",
    "618460530794968/729",
    "-5825738824972472/729",
    "34075590428415200/729",
    "-138689846516551540/729",
    "417032295219846488/729",
    "-959737294012659344/729",
    "191919774489981824/81",
    "-820677231516099100/243",
    "932026632424847960/243",
    "-2530726899989856568/729",
    "1815557475898877984/729",
    "-1019969072098037516/729",
    "439393492396822600/729",
    "-140196204075971840/729",
    "31224729704537216/729",
    "-1444996352993536/243",
    "31389368571008/81",
};

const char* const kTwoLegged7[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "70696890174658568/2187",
    "-1684587188506923920/2187",
    "6315201936216281224/729",
    "-133780627204397704256/2187",
    "665498065031354080456/2187",
    "-2480051038872504782384/2187",
    "7186439203612748889880/2187",
    "-16585967336330196209696/2187",
    "30973939081698653980888/2187",
    "-15759088207491625771216/729",
    "59316651347289200585864/2187",
    "-61294373220356485664000/2187",
    "52084247212114918540376/2187",
    "-36202722253041172445008/2187",
    "20386035169723888009928/2187",
    "-9158234740399344242848/2187",
    "3205807819986945943040/2187",
    "-842821687710905844352/2187",
    "156579118841594853376/2187",
    "-6110092774214438912/729",
    "1017070902906060800/2187",
};

const char* const kRegular2[] = {
    "0",
    "-13/3",
    "18",
    "-23",
    "28/3",
};

const char* const kRegular3[] = {
    "0",
    "0",
    "0",
    "5482/27",
    "-14620/9",
    "15580/3",
    "-231920/27",
    "70270/9",
    "-3716",
    "19600/27",
};

const char* const kRegular4[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "-724697/27",
    "315602",
    "-43334935/27",
    "4659228",
    "-76879901/9",
    "277757942/27",
    "-73403603/9",
    "37007360/9",
    "-32343136/27",
    "4152848/27",
};

const char* const kRegular5[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "566095186/81",
    "-108169204",
    "60942443960/81",
    "-28077019600/9",
    "8609216140",
    "-450631849304/27",
    "630238738696/27",
    "-23759139360",
    "472123187750/27",
    "-735685914340/81",
    "3162718496",
    "-53730218864/81",
    "1711942400/27",
};

const char* const kRegular6[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "-732368409218/243",
    "4681900125716/81",
    "-123811531236922/243",
    "2000274509112824/729",
    "-273020590837748/27",
    "6572679622235672/243",
    "-39591433575380588/729",
    "750851640690272/9",
    "-2671231905442474/27",
    "2447012252991196/27",
    "-5155389905557430/81",
    "8181175655761048/243",
    "-9470356139656016/729",
    "93238615341712/27",
    "-137458396716032/243",
    "31389368571008/729",
};

const char* const kRegular7[] = {
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "1416512777883484/729",
    "-1199849052401896/27",
    "345596095181486968/729",
    "-762707995529261600/243",
    "10547915810649478660/729",
    "-35986409557097447672/729",
    "10471595757825979504/81",
    "-193855395613589567104/729",
    "317685851865765912100/729",
    "-418100684741264044520/729",
    "147719729846848623464/243",
    "-377558000806739867296/729",
    "85576745657229258068/243",
    "-137484666405365276200/729",
    "56726601141030011360/729",
    "-644643067895245952/27",
    "3740709382598685952/729",
    "-502622738156253568/729",
    "31783465715814400/729",
};

std::span<const char* const> builtin_rows(Family family, int genus) {
  if (family == Family::TwoLegged) {
    switch (genus) {
      case 1: return kTwoLegged1;
      case 2: return kTwoLegged2;
      case 3: return kTwoLegged3;
      case 4: return kTwoLegged4;
      case 5: return kTwoLegged5;
      case 6: return kTwoLegged6;
      case 7: return kTwoLegged7;
      default: return {};
    }
  }
  switch (genus) {
    case 2: return kRegular2;
    case 3: return kRegular3;
    case 4: return kRegular4;
    case 5: return kRegular5;
    case 6: return kRegular6;
    case 7: return kRegular7;
    default: return {};
  }
}

}  // namespace

bool has_builtin(Family family, int genus) { return !builtin_rows(family, genus).empty(); }

LaurentVector load_builtin(Family family, int genus) {
  const auto rows = builtin_rows(family, genus);
  if (rows.empty())
    fail(errc::no_builtin_data, "no builtin data for family '" +
                                    std::string(1, family_tag(family)) + "' genus " +
                                    std::to_string(genus));
  const ModelSpec m = ModelSpec::make(family, 2, genus);
  const int j = m.j_init();
  if (static_cast<long>(rows.size()) != m.band_len())
    fail(errc::length_mismatch, "builtin table length mismatch for " + m.describe());

  // The appendix rows carry j_zero - j_init explicit leading zeros; strip them
  // to the natural form and let the window constructor re-pad.
  const std::size_t npad = static_cast<std::size_t>(m.j_zero() - j);
  std::vector<Rational> natural;
  natural.reserve(rows.size() - npad);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational c = parse_rational(rows[i]);
    if (i < npad && c != 0)
      fail(errc::inconsistent_vector, "builtin table padding corrupt for " + m.describe());
    if (i >= npad) natural.push_back(std::move(c));
  }
  return LaurentVector::from_natural(m, j, std::move(natural));
}

}  // namespace mapcount
