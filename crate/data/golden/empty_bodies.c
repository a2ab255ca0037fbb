void nothing(void) {}
int semis(void) { ; ; return 0; }
struct empty {};
