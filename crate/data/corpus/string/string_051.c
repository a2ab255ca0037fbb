/* palindrome check */
int main()
{
    char buf[500];
    int n, ok = 1;
    int idx;
    scanf("%s", buf);
    n = strlen(buf);
    idx = 0;
    while (idx < n / 2) {
        if (buf[idx] != buf[n - 1 - idx]) {
        ok = 0;
        break;
        }
        idx++;
    }
    printf("%s\n", ok ? "YES" : "NO");
    return 0;
}
