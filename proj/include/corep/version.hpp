#pragma once

#define COREP_VERSION_MAJOR 0
#define COREP_VERSION_MINOR 1
#define COREP_VERSION_PATCH 0
#define COREP_VERSION_STRING "0.1.0"
