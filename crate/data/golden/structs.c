struct point {
    int x, y;
};
struct point origin;
struct rect {
    struct point lo;
    struct point hi;
    struct rect *next;
} r1, r2;
struct fwd;
union val {
    int i;
    double d;
    char bytes[8];
};
int area(struct rect *r)
{
    return (r->hi.x - r->lo.x) * (r->hi.y - r->lo.y);
}
