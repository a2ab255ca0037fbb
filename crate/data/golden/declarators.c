int a[2][3];
int *b[4];
int (*c)[5];
int (*fp)(int, char *);
int *g(void);
char **argvp;
const int *const cp = 0;
static unsigned long long big = 0x10ULL;
extern int ext;
int x, *y = 0, z[3] = {1, 2, 3};
