enum color { RED, GREEN = 4, BLUE, };
enum color paint = GREEN;
enum { A = 1 << 2, B = A | 1 };
int pick(enum color c)
{
    switch (c) {
    case RED:
        return 1;
    case GREEN:
    case BLUE:
        return 2;
    }
    return 0;
}
