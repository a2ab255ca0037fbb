int main(void)
{
    int data[] = {-9, -10, 76, 9, 59, 80, 65, 53, 10, 96};
    int n = sizeof(data) / sizeof(data[0]);
    int res = 0;
    int idx;
    for (idx = 0; idx < n; idx++) {
        res = res + data[idx];
    }
    printf("%d\n", (int)res);
    return 0;
}
