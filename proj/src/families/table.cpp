#include <map>

#include "cubictors/errors.hpp"
#include "cubictors/families.hpp"

namespace cubictors {

namespace {

struct Entry {
  const char* name;
  const char* var;
  const char* text;
};

// Transcribed as printed; each row is checksummed in the tests.
constexpr Entry kTable[] = {
    // 13-isogeny model (U = 1) and its cubic.
    {"ISO13.A", "t", "-27(t^4-t^3+5t^2+t+1)(t^2+1)^2(t^8-5t^7+7t^6-5t^5+5t^3+7t^2+5t+1)"},
    {"ISO13.B", "t",
     "-54(t^4-t^3+5t^2+t+1)(t^2+1)^4(t^12-8t^11+25t^10-44t^9+40t^8+18t^7-40t^6-18t^5+40t^4+44t^3+25t^2+8t+1)"},
    {"ISO13.a3", "t", "t^12"},
    {"ISO13.a2", "t", "9t^8(t-1)^2(t^2+1)(t^4-t^3+5t^2+t+1)"},
    {"ISO13.a1", "t", "27t^4(t^2+1)^2(t^4-t^3+5t^2+t+1)(t^8-5t^7+15t^6-29t^5+16t^4-3t^3-9t^2-3t+1)"},
    {"ISO13.a0", "t",
     "27(t^2+1)^3(t^4-t^3+5t^2+t+1)(t^14-8t^13+38t^12-124t^11+245t^10-326t^9+228t^8+120t^7+12t^6+38t^5-43t^4"
     "-80t^3-34t^2-4t+1)"},
    {"ISO13.beta2", "t", "-9(t^2+1)(t^4-t^3+5t^2+t+1)(t^5-t^4)^2/t^12"},
    {"ISO13.beta1", "t",
     "-18(t^2+1)(t^4-t^3+5t^2+t+1)(3t^9-12t^8+24t^7-42t^6+15t^5-33t^4-12t^3-6t^2-6t-3)(t^5-t^4)/t^12"},
    {"ISO13.beta0", "t", "-9(t^2+1)(t^4-t^3+5t^2+t+1)(3t^9-12t^8+24t^7-42t^6+15t^5-33t^4-12t^3-6t^2-6t-3)^2/t^12"},
    {"ISO13.U", "t", "-1/((t^2+1)(t^4-t^3+5t^2+t+1))"},
    {"ISO13.b1", "t", "3(t-1)/t^2"},
    {"ISO13.b0", "t", "9(t^2+1)(t^7-4t^6+7t^5-10t^4-2t^3-t^2-2t-1)/t^6"},

    // Final Z/13 family.
    {"F13.A", "u", "-27(u^8-5u^7+7u^6-5u^5+5u^3+7u^2+5u+1)/(u^4-u^3+5u^2+u+1)"},
    {"F13.B", "u",
     "54(u^2+1)(u^12-8u^11+25u^10-44u^9+40u^8+18u^7-40u^6-18u^5+40u^4+44u^3+25u^2+8u+1)/(u^4-u^3+5u^2+u+1)^2"},
    {"F13.a3", "u", "u^12(u^4-u^3+5u^2+u+1)^2"},
    {"F13.a2", "u", "-9u^8(u-1)^2(u^4-u^3+5u^2+u+1)^2"},
    {"F13.a1", "u", "27u^4(u^4-u^3+5u^2+u+1)(u^8-5u^7+15u^6-29u^5+16u^4-3u^3-9u^2-3u+1)"},
    {"F13.a0", "u",
     "-27u^14+216u^13-1026u^12+3348u^11-6615u^10+8802u^9-6156u^8-3240u^7-324u^6-1026u^5+1161u^4+2160u^3"
     "+918u^2+108u-27"},

    // Kubert 7-torsion family.
    {"K7.a1", "u", "-(u^2-u-1)"},
    {"K7.a2", "u", "-(u^3-u^2)"},
    {"K7.a3", "u", "-(u^3-u^2)"},
    {"K7.disc", "u", "u^7(u-1)^7(u^3-8u^2+5u+1)"},
    {"K7.fA", "u", "-(u^2-u+1)(u^6-11u^5+30u^4-15u^3-10u^2+5u+1)/3"},
    {"K7.fB", "u",
     "2(u^12-18u^11+117u^10-354u^9+570u^8-486u^7+273u^6-222u^5+174u^4-46u^3-15u^2+6u+1)/27"},
    {"K7.interval", "u", "u^3-8u^2+5u+1"},

    // 9-isogeny model (U = 1) and the 3-torsion normalization.
    {"ISO9.A", "t", "-2187(t+1)^3(9t^3+27t^2+27t+1)"},
    {"ISO9.B", "t", "-39366(t+1)^3(27t^6+162t^5+405t^4+504t^3+297t^2+54t-1)"},
    {"ISO9.lin", "t", "81t^3+243t^2+243t+81"},
    {"S3.A", "s", "-3(s+1)(9s^3+27s^2+27s+1)"},
    {"S3.B", "s", "2(27s^6+162s^5+405s^4+504s^3+297s^2+54s-1)"},
    {"S3.F2", "s", "-9s^2-30s-33"},
    {"S3.F1", "s", "27s^4+180s^3+450s^2+516s+219"},
    {"S3.F0", "s", "-27s^6-270s^5-1053s^4-2196s^3-2565s^2-1566s-323"},
    {"S3.Fdisc", "s", "2^12 3^4 (s^2+3s+3)^2"},
    {"S3.s", "u", "(u^3-3u^2)/(3u-3)"},

    // Final Z/18 family over cyclic fields.
    {"F18.A", "u",
     "-27(u^3-3u^2+3u-3)(u^9-9u^8+36u^7-90u^6+162u^5-216u^4+192u^3-90u^2+9u-3)"},
    {"F18.B", "u",
     "54(u^6-6u^5+15u^4-24u^3+27u^2-18u-3)(u^12-12u^11+66u^10-228u^9+567u^8-1080u^7+1596u^6-1800u^5"
     "+1503u^4-900u^3+378u^2-108u+9)"},
    {"F18.a3", "u", "27(u-1)^6"},
    {"F18.a2", "u", "-27(u-1)^4(u^6-6u^5+19u^4-40u^3+63u^2-66u+33)"},
    {"F18.a1", "u",
     "9(u-1)^2(u^3-3u^2+3u-3)(u^9-9u^8+44u^7-146u^6+354u^5-648u^4+912u^3-954u^2+657u-219)"},
    {"F18.a0", "u",
     "-u^18+18u^17-165u^16+1020u^15-4716u^14+17172u^13-50904u^12+125820u^11-263358u^10+470376u^9"
     "-718146u^8+934740u^7-1028268u^6+939276u^5-693360u^4+399924u^3-173097u^2+52326u-8721"},

    // Kubert 9-torsion family.
    {"K9.a1", "u", "-(u^3-u^2-1)"},
    {"K9.a2", "u", "-u^2(u-1)(u^2-u+1)"},
    {"K9.a3", "u", "-u^2(u-1)(u^2-u+1)"},
    {"K9.disc", "u", "u^9(u-1)^9(u^2-u+1)^3(u^3-6u^2+3u+1)"},
    {"K9.fA", "u",
     "-(u^3-3u^2+1)(u^9-9u^8+27u^7-48u^6+54u^5-45u^4+27u^3-9u^2+1)/3"},
    {"K9.fB", "u",
     "2(u^18-18u^17+135u^16-570u^15+1557u^14-2970u^13+4128u^12-4230u^11+3240u^10-2032u^9+1359u^8-1080u^7"
     "+735u^6-306u^5+27u^4+42u^3-18u^2+1)/27"},
    {"K9.interval", "u", "u^3-6u^2+3u+1"},

    // Z/2 x Z/14 family.
    {"F2x14.f3", "t", "t^2-1"},
    {"F2x14.f2", "t", "t^3+2t^2-9t-2"},
    {"F2x14.f1", "t", "-9(t^2-1)"},
    {"F2x14.f0", "t", "-t^3-2t^2+9t+2"},
    {"F2x14.A2", "u",
     "-4(u^6+2u^5+15u^4-20u^3+15u^2+18u+33)(u-1)^2(u+1)^2/((u^2+3)^3(u^6+4u^5+13u^4-40u^3+19u^2+36u+31))"},
    {"F2x14.A4", "u",
     "64(u^6+2u^5+3u^4-20u^3+39u^2+18u+21)(u-1)^6(u+1)^6/((u^2+3)^6(u^6+4u^5+13u^4-40u^3+19u^2+36u+31)^2)"},
    {"F2x14.A6", "u", "4096(u-1)^12(u+1)^12/((u^6+4u^5+13u^4-40u^3+19u^2+36u+31)^3(u^2+3)^9)"},
    {"F2x14.A", "u",
     "-(u^12+4u^11-10u^10-68u^9+3u^8+552u^7+4u^6-2568u^5+2103u^4+1684u^3+1958u^2+396u+37)"
     "/(48(u^2+3)^3(u^6+4u^5+13u^4-40u^3+19u^2+36u+31))"},
    {"F2x14.B", "u",
     "(u^24+8u^23+12u^22-120u^21-518u^20+504u^19+5068u^18+568u^17-24009u^16-15024u^15+62936u^14"
     "+183120u^13-550452u^12-851984u^11+4384056u^10-3808912u^9+1467519u^8-4083672u^7+3590300u^6"
     "+5512360u^5+6945498u^4+2943128u^3+893052u^2+120024u+3753)"
     "/(864(u^2+3)^6(u^6+4u^5+13u^4-40u^3+19u^2+36u+31)^2)"},
    {"F2x14.p.2", "t",
     "(t-1)(t+1)(t^5+t^4-6t^3-46t^2+53t+29)/(2(t^2+3)(t^6+4t^5+13t^4-40t^3+19t^2+36t+31))"},
    {"F2x14.p.1", "t",
     "(t^8+4t^7-4t^6-60t^5-42t^4+492t^3-228t^2-308t-111)/(2(t^2+3)(t^6+4t^5+13t^4-40t^3+19t^2+36t+31))"},
    {"F2x14.p.0", "t",
     "(t+1)(t^7-2t^6+t^5-58t^4+259t^3-318t^2-5t-6)/(2(t^2+3)(t^6+4t^5+13t^4-40t^3+19t^2+36t+31))"},
    {"F2x14.q", "t", "-1/2"},
    {"F2x14.r", "t",
     "-(t^12+4t^11+6t^10-36t^9-45t^8+168t^7+804t^6-1608t^5+855t^4+788t^3+2166t^2+684t+309)"
     "/(12(t^2+3)^2(t^8+4t^7+16t^6-28t^5+58t^4-84t^3+88t^2+108t+93))"},
    {"F2x14.s", "t",
     "(t^12+4t^11+6t^10-36t^9-45t^8+168t^7+804t^6-1608t^5+855t^4+788t^3+2166t^2+684t+309)"
     "/(24(t^2+3)^2(t^8+4t^7+16t^6-28t^5+58t^4-84t^3+88t^2+108t+93))"},
    {"F2x14.x1.2", "t",
     "-(t-1)(t+1)^3(t^11+5t^10+7t^9-53t^8-150t^7+178t^6+1422t^5-906t^4-379t^3-10823t^2+22651t-14001)"
     "/(6144(t-1)^2(t^3+t^2-9t-1)^2)"},
    {"F2x14.x1.1", "t",
     "-(t+1)^2(t^14+6t^13+7t^12-84t^11-271t^10+330t^9+2879t^8+168t^7-12821t^6-9926t^5+19677t^4+96236t^3"
     "-174941t^2+68918t+26205)/(6144(t-1)^2(t^3+t^2-9t-1)^2)"},
    {"F2x14.x1.0", "t",
     "(t^16+13t^15+63t^14+69t^13-549t^12-1919t^11+1227t^10+15593t^9+13329t^8-49369t^7-81699t^6+79599t^5"
     "+234489t^4-166773t^3-202663t^2+90019t+134106)/(6144(t-1)^2(t^3+t^2-9t-1)^2)"},
    {"F2x14.y1.2", "t",
     "-(t-1)(t+1)^3(t^11+5t^10+7t^9-45t^8-150t^7+114t^6+782t^5+390t^4-2427t^3-1223t^2+1787t+2807)"
     "/(256(t-1)(t^3+t^2-9t-1)^3)"},
    {"F2x14.y1.1", "t",
     "-(t+1)^2(t^14+6t^13+7t^12-76t^11-263t^10+226t^9+2135t^8+760t^7-7621t^6-9622t^5+19213t^4+18452t^3"
     "-8501t^2-26130t-4971)/(256(t-1)(t^3+t^2-9t-1)^3)"},
    {"F2x14.y1.0", "t",
     "(t^14+11t^13+40t^12-14t^11-497t^10-847t^9+2218t^8+6764t^7-4225t^6-23171t^5-2172t^4+43778t^3"
     "+14481t^2-26521t-26230)(t+1)^2/(256(t-1)(t^3+t^2-9t-1)^3)"},

    // Obstruction curves.
    {"C7.h", "u", "-3u(u-1)(u^3-8u^2+5u+1)"},
    {"C9.h", "u", "-3u(u-1)(u^2-u+1)(u^3-6u^2+3u+1)"},
};

const std::map<std::string, RationalFunction, std::less<>>& parsed() {
  static const auto table = [] {
    std::map<std::string, RationalFunction, std::less<>> m;
    for (const auto& e : kTable) m.emplace(e.name, RationalFunction::parse(e.text, e.var));
    return m;
  }();
  return table;
}

}  // namespace

const RationalFunction& coefficient(std::string_view name) {
  const auto& m = parsed();
  auto it = m.find(name);
  if (it == m.end()) throw InvalidInput("unknown family coefficient " + std::string(name));
  return it->second;
}

std::vector<std::string> coefficient_names() {
  std::vector<std::string> out;
  for (const auto& e : kTable) out.emplace_back(e.name);
  return out;
}

Rational coefficient_at(std::string_view name, const Rational& u) {
  try {
    return coefficient(name)(u);
  } catch (const DivisionByZero&) {
    throw Excluded(std::string(name) + " has a pole at " + u.to_string());
  }
}

}  // namespace cubictors
