#include <gtest/gtest.h>

#include <cmath>

#include "slotbrillouin/errors.hpp"
#include "slotbrillouin/materials.hpp"

using namespace slotbrillouin;

TEST(Materials, BuiltinTableHasTheShippedRecords) {
    const auto& lib = MaterialLibrary::builtin();
    for (const char* name : {"vacuum", "silicon", "silica", "helium"}) EXPECT_TRUE(lib.contains(name)) << name;
    EXPECT_DOUBLE_EQ(lib.get("silicon").index, 3.48);
    EXPECT_NEAR(lib.get("silicon").permittivity, 3.48 * 3.48, 1e-12);
}

TEST(Materials, HeliumBulkModulusFromDensityAndSoundSpeed) {
    const auto& he = builtin_material("helium");
    ASSERT_TRUE(he.has_acoustics());
    EXPECT_NEAR(he.acoustics().bulk_modulus, 145.0 * 238.0 * 238.0, 1e-6);
    EXPECT_NEAR(he.acoustics().bulk_modulus / 8.21e6, 1.0, 1e-3);
}

TEST(Materials, ElectrostrictiveConstant) {
    // (eps - 1)(eps + 2) / 3
    const double eps = 1.029 * 1.029;
    EXPECT_NEAR(electrostrictive_constant(eps), (eps - 1) * (eps + 2) / 3, 1e-15);
    EXPECT_NEAR(electrostrictive_constant(eps), 0.0600, 5e-4);
    EXPECT_DOUBLE_EQ(electrostrictive_constant(1.0), 0.0);
    EXPECT_THROW(electrostrictive_constant(0.5), DomainError);
}

TEST(Materials, HeliumFigureOfMeritBeatsSilica) {
    const auto& he = builtin_material("helium");
    const auto& sio2 = builtin_material("silica");
    const double fom_he = material_fom(electrostrictive_constant(he.permittivity), he.acoustics().bulk_modulus);
    const double fom_si = material_fom(electrostrictive_constant(sio2.permittivity), sio2.acoustics().bulk_modulus);
    EXPECT_GT(fom_he, fom_si);
    EXPECT_THROW(material_fom(0.06, 0.0), DomainError);
}

TEST(Materials, UnknownNameListsAvailable) {
    try {
        (void)MaterialLibrary::builtin().get("unobtainium");
        FAIL() << "expected NotFoundError";
    } catch (const NotFoundError& e) {
        EXPECT_NE(std::string(e.what()).find("helium"), std::string::npos);
    }
}

TEST(Materials, ParserRejectsMalformedRecords) {
    EXPECT_THROW(MaterialLibrary::parse("name=x n=1\n"), ParseError);  // no version line
    EXPECT_THROW(MaterialLibrary::parse("format-version 1\nname=x n=1 colour=red\n"), ParseError);
    EXPECT_THROW(MaterialLibrary::parse("format-version 1\nname=x n=1\nname=x n=2\n"), ParseError);
    EXPECT_THROW(MaterialLibrary::parse("format-version 1\nname=x n=1 rho=10\n"), ParseError);
    EXPECT_THROW(MaterialLibrary::parse("format-version 1\nname=x n=1 rho=1 c=2 K=5\n"), ParseError);
    const auto lib = MaterialLibrary::parse("format-version 1\n# comment\nname=x n=1.5 rho=2 c=3\n");
    EXPECT_NEAR(lib.get("x").acoustics().bulk_modulus, 18.0, 1e-12);
}
