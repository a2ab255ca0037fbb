int main()
{
    char str[500];
    int L, is_pal = 1;
    int p;
    scanf("%s", str);
    L = strlen(str);
    for (p = 0; p < L / 2; p++) {
        if (str[p] != str[L - 1 - p]) {
                    is_pal = 0;
                    break;
                }
    }
    if (is_pal)
        printf("yes\n");
    else
        printf("no\n");
    return 0;
}
