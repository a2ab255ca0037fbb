char *msg = "hello, " "world";
char c = '\n', q = '\'', nul = '\0';
float f = 1.5f, g = .25, h = 1e-3, k = 2.;
unsigned u = 017u + 0xFFu + 42UL + 7ll;
double hx = 0x1.8p3;
