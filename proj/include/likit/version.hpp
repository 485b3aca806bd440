#pragma once

#define LIKIT_VERSION "0.1.0"
