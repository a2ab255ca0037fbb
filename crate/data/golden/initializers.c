int grid[2][3] = {{1, 2, 3}, {4, 5, 6}};
int empty[4] = {0};
struct pt { int x, y; } pts[2] = {{1, 2}, {3, 4},};
char word[] = "abc";
char letters[] = {'a', 'b', 'c', '\0'};
int main(void)
{
    int v[3] = {1 + 2, grid[0][1], sizeof(int)};
    struct pt *p = &(struct pt){5, 6};
    return v[0] + p->x;
}
