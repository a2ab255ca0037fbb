int main()
{
    char str[500];
    int n, flag = 1;
    int k;
    scanf("%s", str);
    n = strlen(str);
    for (k = 0; k < n / 2; k++) {
        if (str[k] != str[n - 1 - k]) {
                    flag = 0;
                    break;
                }
    }
    if (flag)
        printf("yes\n");
    else
        printf("no\n");
    return 0;
}
