#ifndef APROOT_APROOT_HPP
#define APROOT_APROOT_HPP

#include <aproot/driver.hpp>
#include <aproot/hensel.hpp>
#include <aproot/invariants.hpp>
#include <aproot/parse.hpp>
#include <aproot/report.hpp>
#include <aproot/resultant.hpp>
#include <aproot/testkit.hpp>

#endif
